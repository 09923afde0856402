#include "cotame/grading.hpp"

#include <algorithm>

#include "cotame/errors.hpp"

namespace cotame {

namespace {

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::ResourceLimit, "class parameter overflows 64 bits");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::ResourceLimit, "class parameter overflows 64 bits");
  return out;
}

void require_class_dimension(int n) {
  if (n < 3) fail(ErrorKind::BadDimension, "degree classes need n >= 3");
  VarSpace::lifted(n).validate();
}

Monomial leading_shape(const DegreeClassTag& tag, int n) {
  Monomial m;
  m.set(0, static_cast<std::uint32_t>(tag.alpha));
  m.set(tag.kind == ClassKind::Q ? 1 : n, static_cast<std::uint32_t>(tag.beta));
  return m;
}

bool within_bounds(const Monomial& m, const DegreeClassTag& tag, int n, const WeightVector& w1,
                   const WeightVector& w2, const WeightVector& w3) {
  if (tag.kind == ClassKind::P) {
    return static_cast<long long>(m.weighted_degree(w1.entries)) <= tag.alpha + tag.beta &&
           static_cast<long long>(m.weighted_degree(w2.entries)) <= (n - 2) * tag.alpha + (n - 1) * tag.beta;
  }
  return static_cast<long long>(m.weighted_degree(w3.entries)) <= tag.beta;
}

}  // namespace

WeightVector make_weight(WeightKind kind, int n) {
  require_class_dimension(n);
  WeightVector w;
  w.entries.resize(static_cast<std::size_t>(n + 1));
  for (int slot = 0; slot <= n; ++slot) {
    auto& e = w.entries[static_cast<std::size_t>(slot)];
    switch (kind) {
      case WeightKind::W1: e = 1; break;
      case WeightKind::W2: e = static_cast<std::uint32_t>(slot == 0 ? n - 2 : 2 * n - slot - 1); break;
      case WeightKind::W3: e = slot == 0 ? 0 : 1; break;
    }
  }
  return w;
}

void DegreeClassTag::validate() const {
  if (alpha < 0 || beta < 1) fail(ErrorKind::BadParameter, "class parameters need alpha >= 0 and beta >= 1");
}

std::string DegreeClassTag::to_string() const {
  const char* name = kind == ClassKind::P ? "P" : (kind == ClassKind::Q ? "Q" : "R");
  return std::string(name) + "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

bool in_class(const Polynomial& p, const DegreeClassTag& tag) {
  tag.validate();
  if (!p.space().extended) fail(ErrorKind::SpaceMismatch, "degree classes live in k[t,x]");
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "0 belongs to no degree class");
  const int n = p.space().n;
  if (tag.alpha > kMaxExponent || tag.beta > kMaxExponent) return false;
  if (leading_term(p).mono != leading_shape(tag, n)) return false;
  if (tag.kind == ClassKind::P) {
    return static_cast<long long>(weighted_degree(p, make_weight(WeightKind::W1, n))) <= tag.alpha + tag.beta &&
           static_cast<long long>(weighted_degree(p, make_weight(WeightKind::W2, n))) <=
               (n - 2) * tag.alpha + (n - 1) * tag.beta;
  }
  return static_cast<long long>(weighted_degree(p, make_weight(WeightKind::W3, n))) <= tag.beta;
}

DegreeClassTag transition_eps_prime(const DegreeClassTag& tag) {
  if (tag.kind != ClassKind::R) fail(ErrorKind::WrongKind, "eps' transition expects an R class, got " + tag.to_string());
  return {ClassKind::Q, tag.alpha, tag.beta};
}

DegreeClassTag transition_eps_t(const DegreeClassTag& tag, int n, int l) {
  if (tag.kind != ClassKind::Q) fail(ErrorKind::WrongKind, "eps transition expects a Q class, got " + tag.to_string());
  return {ClassKind::P, checked_add(tag.alpha, checked_mul(checked_mul(n - 1, l), tag.beta)), tag.beta};
}

long long mu_param(std::span<const Rational> a, int n) {
  if (static_cast<int>(a.size()) != n) fail(ErrorKind::ArityMismatch, "translation length must equal n");
  long long top = 0;
  for (int i = 1; i <= n; ++i) {
    if (!a[static_cast<std::size_t>(i - 1)].is_zero()) top = i;
  }
  if (top == 0) fail(ErrorKind::ZeroVector, "mu needs a nonzero translation");
  if (n % 2 == 1) return top + n - 2;
  return 2 * top + 2 * n - 4;
}

DegreeClassTag transition_word_step(const DegreeClassTag& tag, long long mu, int n, int l) {
  if (tag.kind != ClassKind::P) fail(ErrorKind::WrongKind, "word step expects a P class, got " + tag.to_string());
  if (n % 2 == 1) {
    return {ClassKind::P, checked_mul(l, checked_add(checked_mul(mu, tag.alpha), checked_mul(n - 1, tag.beta))),
            checked_add(tag.alpha, tag.beta)};
  }
  const long long m = n / 2;
  return {ClassKind::P, checked_mul(l, checked_add(checked_mul(mu, tag.alpha), checked_mul(2 * m - 1, tag.beta))),
          checked_add(checked_mul(2, tag.alpha), tag.beta)};
}

WordPrediction word_class_predict(const WordSpec& word, int n, int l) {
  require_class_dimension(n);
  if (l < 1) fail(ErrorKind::BadParameter, "l must be at least 1");
  word.validate(n);
  DegreeClassTag tag{ClassKind::P, static_cast<long long>(2 * n - 2) * l, 1};
  for (std::size_t j = word.translations.size(); j-- > 0;) {
    tag = transition_word_step(tag, mu_param(word.translations[j], n), n, l);
  }
  return {tag, checked_add(checked_mul(f_degree(n), tag.alpha), tag.beta)};
}

Polynomial random_class_member(const DegreeClassTag& tag, int n, std::mt19937_64& rng) {
  require_class_dimension(n);
  tag.validate();
  const VarSpace space = VarSpace::lifted(n);
  const Monomial lead = leading_shape(tag, n);
  const auto w1 = make_weight(WeightKind::W1, n);
  const auto w2 = make_weight(WeightKind::W2, n);
  const auto w3 = make_weight(WeightKind::W3, n);

  std::uniform_int_distribution<int> coeff_dist(-3, 3);
  auto nonzero_coeff = [&] {
    int c = 0;
    while (c == 0) c = coeff_dist(rng);
    return Rational(c);
  };

  std::vector<Term> terms{Term{lead, nonzero_coeff()}};
  const int extra = std::uniform_int_distribution<int>(0, 10)(rng);
  const long long x_budget = tag.kind == ClassKind::P ? tag.alpha + tag.beta : tag.beta;
  std::uniform_int_distribution<long long> t_dist(0, tag.alpha);
  std::uniform_int_distribution<int> slot_dist(1, n);
  for (int k = 0; k < extra; ++k) {
    // Rejection sampling; a bounded number of attempts keeps this total.
    for (int attempt = 0; attempt < 64; ++attempt) {
      Monomial m;
      m.set(0, static_cast<std::uint32_t>(t_dist(rng)));
      const long long x_degree = std::uniform_int_distribution<long long>(0, x_budget)(rng);
      for (long long e = 0; e < x_degree; ++e) {
        const int slot = slot_dist(rng);
        m.set(slot, m[slot] + 1);
      }
      if (m < lead && within_bounds(m, tag, n, w1, w2, w3)) {
        terms.push_back(Term{m, nonzero_coeff()});
        break;
      }
    }
  }
  return Polynomial::from_terms(space, std::move(terms));
}

}  // namespace cotame
