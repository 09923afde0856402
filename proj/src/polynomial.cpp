#include "cotame/polynomial.hpp"

#include <algorithm>
#include <map>

#include "cotame/errors.hpp"
#include "cotame/kernels.hpp"

namespace cotame {

namespace {

bool descending(const Term& a, const Term& b) { return a.mono > b.mono; }

std::string describe(const VarSpace& s) {
  return std::string(s.extended ? "k[t,x1..x" : "k[x1..x") + std::to_string(s.n) + "]";
}

}  // namespace

void require_same_space(const VarSpace& a, const VarSpace& b, const char* what) {
  if (!(a == b)) {
    fail(ErrorKind::SpaceMismatch, std::string(what) + ": " + describe(a) + " vs " + describe(b));
  }
}

Polynomial Polynomial::constant(VarSpace space, const Rational& c) {
  return monomial(space, Monomial{}, c);
}

Polynomial Polynomial::monomial(VarSpace space, const Monomial& m, const Rational& c) {
  Polynomial p(space);
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::var(VarSpace space, int slot) {
  if (slot < 0 || slot >= space.slots()) fail(ErrorKind::ArityMismatch, "variable slot out of range");
  return monomial(space, Monomial::unit(slot), Rational(1));
}

Polynomial Polynomial::x(VarSpace space, int i) {
  if (i < 1 || i > space.n) fail(ErrorKind::ArityMismatch, "x" + std::to_string(i) + " not in ring");
  return var(space, space.x_slot(i));
}

Polynomial Polynomial::t(VarSpace space) {
  if (!space.extended) fail(ErrorKind::SpaceMismatch, "t requires the extended ring");
  return var(space, 0);
}

Polynomial Polynomial::from_terms(VarSpace space, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  Polynomial p(space);
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == term.mono) {
      p.terms_.back().coeff += term.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::from_sorted(VarSpace space, std::vector<Term> terms) {
  Polynomial p(space);
  p.terms_ = std::move(terms);
  return p;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& term, const Monomial& key) { return term.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

std::uint32_t Polynomial::degree_in(int slot) const {
  std::uint32_t best = 0;
  for (const auto& term : terms_) best = std::max(best, term.mono[slot]);
  return best;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_space(space_, o.space_, "add");
  if (o.terms_.empty()) return *this;
  terms_ = kernels::merge_add(terms_, o.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_space(a.space_, b.space_, "mul");
  return Polynomial::from_sorted(a.space_, kernels::mul_parallel(a.terms_, b.terms_));
}

Polynomial operator-(Polynomial a) {
  for (auto& term : a.terms_) term.coeff = -term.coeff;
  return a;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, std::uint32_t e) {
  Polynomial result = Polynomial::constant(p.space(), Rational(1));
  Polynomial base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial mul_monomial(const Polynomial& p, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return Polynomial(p.space());
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& term : p.terms()) out.push_back(Term{term.mono * m, term.coeff * c});
  return Polynomial::from_sorted(p.space(), std::move(out));
}

std::uint32_t total_degree(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  std::uint32_t best = 0;
  for (const auto& term : p.terms()) best = std::max(best, term.mono.degree());
  return best;
}

std::uint64_t weighted_degree(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "weighted degree of the zero polynomial");
  if (static_cast<int>(w.entries.size()) != p.space().slots()) {
    fail(ErrorKind::SpaceMismatch, "weight vector length does not match the ring");
  }
  std::uint64_t best = 0;
  for (const auto& term : p.terms()) best = std::max(best, term.mono.weighted_degree(w.entries));
  return best;
}

Term leading_term(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
  return p.terms().front();
}

Polynomial derivative(const Polynomial& p, int slot) {
  std::vector<Term> out;
  for (const auto& term : p.terms()) {
    const std::uint32_t e = term.mono[slot];
    if (e == 0) continue;
    Monomial m = term.mono;
    m.set(slot, e - 1);
    out.push_back(Term{m, term.coeff * Rational(static_cast<long long>(e))});
  }
  // Dividing every surviving monomial by the same variable keeps lex order.
  return Polynomial::from_sorted(p.space(), std::move(out));
}

namespace {

// Horner evaluation over the slot ordering. Terms in [begin, end) agree on
// every slot before `slot`; they are grouped by their exponent at `slot`,
// which appears in descending runs because of the lex order.
class Substituter {
 public:
  Substituter(const Polynomial& p, std::span<const Polynomial> images, VarSpace target)
      : terms_(p.terms()), images_(images), target_(target), powers_(images.size()) {}

  Polynomial run() { return eval(0, terms_.size(), 0); }

 private:
  const Polynomial& power(std::size_t slot, std::uint32_t e) {
    auto& cache = powers_[slot];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images_[slot]);
    return cache[e];
  }

  Polynomial eval(std::size_t begin, std::size_t end, std::size_t slot) {
    if (slot == images_.size()) {
      // Only the coefficient remains: all slots have been consumed.
      Rational c(0);
      for (std::size_t i = begin; i < end; ++i) c += terms_[i].coeff;
      return Polynomial::constant(target_, c);
    }
    const int s = static_cast<int>(slot);
    Polynomial acc(target_);
    std::uint32_t acc_exp = 0;
    bool first = true;
    std::size_t i = begin;
    while (i < end) {
      const std::uint32_t e = terms_[i].mono[s];
      std::size_t j = i;
      while (j < end && terms_[j].mono[s] == e) ++j;
      Polynomial inner = eval(i, j, slot + 1);
      if (first) {
        acc = std::move(inner);
        first = false;
      } else {
        acc = acc * power(slot, acc_exp - e) + inner;
      }
      acc_exp = e;
      i = j;
    }
    if (acc_exp > 0) acc = acc * power(slot, acc_exp);
    return acc;
  }

  std::span<const Term> terms_;
  std::span<const Polynomial> images_;
  VarSpace target_;
  std::vector<std::vector<Polynomial>> powers_;
};

}  // namespace

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (static_cast<int>(images.size()) != p.space().slots()) {
    fail(ErrorKind::ArityMismatch, "substitute needs one image per variable");
  }
  if (images.empty()) fail(ErrorKind::ArityMismatch, "substitute needs at least one image");
  const VarSpace target = images[0].space();
  for (const auto& img : images) require_same_space(target, img.space(), "substitute images");
  if (p.is_zero()) return Polynomial(target);
  return Substituter(p, images, target).run();
}

Polynomial embed(const Polynomial& p, VarSpace target) {
  const VarSpace& src = p.space();
  if (target.n < src.n) fail(ErrorKind::SpaceMismatch, "embed target has fewer variables");
  if (src.extended && !target.extended) {
    if (p.degree_in(0) > 0) fail(ErrorKind::SpaceMismatch, "embed would drop t");
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& term : p.terms()) {
    Monomial m;
    if (src.extended && target.extended) m.set(0, term.mono[0]);
    for (int i = 1; i <= src.n; ++i) m.set(target.x_slot(i), term.mono[src.x_slot(i)]);
    out.push_back(Term{m, term.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace cotame
