#include "cotame/constructions.hpp"

#include <sstream>

#include "cotame/errors.hpp"
#include "cotame/parse.hpp"

namespace cotame {

namespace {

void require_min_dimension(int n) {
  if (n < 3) fail(ErrorKind::BadDimension, "construction needs n >= 3, got " + std::to_string(n));
  VarSpace::plain(n).validate();
}

void require_level(int l) {
  if (l < 1) fail(ErrorKind::BadParameter, "l must be at least 1");
}

VarSpace space_for(int n, bool lifted) { return lifted ? VarSpace::lifted(n) : VarSpace::plain(n); }

// The kernel coefficient f^l, or t^l on the lifted ring.
Polynomial f_power(int n, int l, bool lifted) {
  if (lifted) return pow(Polynomial::t(VarSpace::lifted(n)), static_cast<std::uint32_t>(l));
  return pow(make_f(n), static_cast<std::uint32_t>(l));
}

}  // namespace

Derivation make_D(int n, bool extended) {
  if (n < 2) fail(ErrorKind::BadDimension, "D needs n >= 2");
  const VarSpace space = space_for(n, extended);
  space.validate();
  std::vector<Polynomial> images(static_cast<std::size_t>(space.slots()), Polynomial(space));
  for (int j = 1; j < n; ++j) {
    images[static_cast<std::size_t>(space.x_slot(j))] = Polynomial::x(space, j + 1) * Rational(n - j);
  }
  return Derivation(space, std::move(images));
}

Derivation make_Dprime_closed_form(int n, bool extended) {
  if (n < 2) fail(ErrorKind::BadDimension, "D' needs n >= 2");
  const VarSpace space = space_for(n, extended);
  space.validate();
  std::vector<Polynomial> images(static_cast<std::size_t>(space.slots()), Polynomial(space));
  for (int j = 2; j <= n; ++j) {
    images[static_cast<std::size_t>(space.x_slot(j))] = Polynomial::x(space, j - 1) * Rational(j - 1);
  }
  return Derivation(space, std::move(images));
}

Derivation conjugate_by_sigma(const Derivation& d) {
  const VarSpace space = d.space();
  std::vector<Polynomial> sigma;
  if (space.extended) sigma.push_back(Polynomial::t(space));
  for (int i = 1; i <= space.n; ++i) sigma.push_back(Polynomial::x(space, space.n - i + 1));
  // (sigma D sigma)(v) = sigma(D(sigma(v))); sigma(v) is a single variable.
  std::vector<Polynomial> images;
  for (int slot = 0; slot < space.slots(); ++slot) {
    images.push_back(substitute(apply(d, sigma[static_cast<std::size_t>(slot)]), sigma));
  }
  return Derivation(space, std::move(images));
}

Derivation make_Dprime(int n, bool extended) {
  Derivation conj = conjugate_by_sigma(make_D(n, extended));
  if (!(conj == make_Dprime_closed_form(n, extended))) {
    fail(ErrorKind::ValidationError, "sigma o D o sigma disagrees with the closed form of D'");
  }
  return conj;
}

Polynomial make_f(int n) {
  require_min_dimension(n);
  if (n % 2 == 1) {
    const int m = (n + 1) / 2;
    const VarSpace space = VarSpace::plain(n);
    Polynomial sum(space);
    for (int i = 1; i <= 2 * m - 1; ++i) {
      Rational c = binomial(2 * m - 2, i - 1);
      if (i % 2 == 0) c = -c;
      sum += Polynomial::x(space, i) * Polynomial::x(space, 2 * m - i) * c;
    }
    return sum * Rational(1, 2);
  }
  const VarSpace space = VarSpace::plain(n);
  const Polynomial odd = embed(make_f(n - 1), space);
  const Derivation d = make_D(n);
  const Polynomial d1 = apply(d, odd);
  const Polynomial d2 = apply(d, d1);
  return d1 * d1 - d2 * odd * Rational(2);
}

int f_degree(int n) {
  require_min_dimension(n);
  return n % 2 == 1 ? 2 : 4;
}

Automorphism make_eps(const Polynomial& p) {
  return Automorphism::exponential(make_D(p.space().n, p.space().extended), p);
}

Automorphism make_eps_prime(const Polynomial& q) {
  return Automorphism::exponential(make_Dprime(q.space().n, q.space().extended), q);
}

Automorphism phi_chain(int n, int l, bool lifted, long long power) {
  require_min_dimension(n);
  require_level(l);
  const VarSpace space = space_for(n, lifted);
  if (power == 0) return Automorphism::identity(space);
  const Polynomial fl = f_power(n, l, lifted);
  return make_eps(fl) * make_eps_prime(Polynomial::constant(space, Rational(power))) * make_eps(-fl);
}

Automorphism translation_chain(const std::vector<Rational>& a, bool lifted) {
  const int n = static_cast<int>(a.size());
  if (!lifted) {
    std::vector<Rational> neg;
    for (const auto& v : a) neg.push_back(-v);
    return Automorphism::from_pair(make_translation(a), make_translation(neg));
  }
  const VarSpace space = VarSpace::lifted(n);
  const Polynomial f = make_f(n);
  Polynomial t_image(VarSpace::plain(n));
  for (int i = 1; i <= n; ++i) {
    const Rational& ai = a[static_cast<std::size_t>(i - 1)];
    if (!ai.is_zero()) t_image += derivative(f, i - 1) * ai;
  }
  std::vector<Polynomial> images{embed(t_image, space)};
  for (const auto& v : a) images.push_back(Polynomial::constant(space, v));
  return Automorphism::exponential(Derivation(space, std::move(images)), Polynomial::constant(space, Rational(1)));
}

Automorphism mu_chain(const Rational& a, int n, bool lifted) {
  const Endomorphism mu = make_mu(a, n);
  return Automorphism::from_endomorphism(lifted ? extend_fixing_t(mu) : mu);
}

Automorphism nu_chain(const Rational& b, int n, bool lifted) {
  const Endomorphism nu = make_nu(b, n);
  if (!lifted) return Automorphism::from_endomorphism(nu);
  // nu(f) = b^d f because f is homogeneous of degree d.
  Endomorphism ext = extend_fixing_t(nu);
  std::vector<Polynomial> images(ext.images().begin(), ext.images().end());
  images[0] = images[0] * b.pow(f_degree(n));
  return Automorphism::from_endomorphism(Endomorphism(ext.space(), std::move(images)));
}

Endomorphism expand_through_lift(const Automorphism& lifted_chain) {
  const VarSpace lifted = lifted_chain.space();
  if (!lifted.extended) fail(ErrorKind::SpaceMismatch, "expand_through_lift needs a chain on k[t,x]");
  const Polynomial f = make_f(lifted.n);
  std::vector<Polynomial> images;
  for (int i = 1; i <= lifted.n; ++i) {
    images.push_back(substitution_pi(lifted_chain.apply(Polynomial::x(lifted, i)), f));
  }
  return Endomorphism(VarSpace::plain(lifted.n), std::move(images));
}

Endomorphism make_phi(int n, int l, bool lifted) {
  const Automorphism lifted_phi = phi_chain(n, l, true);
  // The unlifted series blows up in intermediate degree; going through
  // k[t,x] keeps every intermediate at most as large as the result.
  return lifted ? lifted_phi.expand() : expand_through_lift(lifted_phi);
}

std::pair<Automorphism, Automorphism> sigma_pair_chains(int n, int l, const Rational& u, bool lifted) {
  require_min_dimension(n);
  require_level(l);
  if (u.is_zero()) fail(ErrorKind::BadParameter, "u must be nonzero");
  const int d = f_degree(n);
  const long long dl = static_cast<long long>(d) * l;
  if ((Rational(1) - u.pow(2 * dl)).is_zero()) fail(ErrorKind::BadParameter, "1 - u^(2dl) must be nonzero");
  if (dl % 2 != 0) fail(ErrorKind::BadParameter, "dl/2 must be an integer");
  const VarSpace space = space_for(n, lifted);
  const Automorphism phi = phi_chain(n, l, lifted);
  const Rational half = u.pow(dl / 2);
  const Automorphism sigma1 = phi.inverse() *
                              make_eps(Polynomial::constant(space, Rational(1) - u.pow(-dl))) *
                              mu_chain(half, n, lifted) * nu_chain(u, n, lifted) * phi;
  const Automorphism sigma2 = nu_chain(u.inverse(), n, lifted) * mu_chain(half, n, lifted) *
                              make_eps(Polynomial::constant(space, Rational(1) - u.pow(dl)));
  return {sigma1, sigma2};
}

std::pair<Endomorphism, Endomorphism> make_sigma_pair(int n, int l, const Rational& u) {
  const auto [s1, s2] = sigma_pair_chains(n, l, u, true);
  return {expand_through_lift(s1), expand_through_lift(s2)};
}

ElMatrices el_base_matrices(const Rational& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroScalar, "el matrices need a nonzero scalar");
  RationalMatrix A = RationalMatrix::identity(2);
  A(1, 0) = a;
  RationalMatrix B = RationalMatrix::identity(2);
  B(0, 1) = a;
  return {A, B, RationalMatrix::diagonal({a, a.inverse()})};
}

ElMatrices el_matrices(const Rational& a, int n) {
  if (a.is_zero()) fail(ErrorKind::ZeroScalar, "el matrices need a nonzero scalar");
  if (n < 2) fail(ErrorKind::BadDimension, "el matrices need n >= 2");
  const auto size = static_cast<std::size_t>(n);
  RationalMatrix A(size, size), B(size, size), C(size, size);
  for (int i = 1; i <= n; ++i) {
    const auto col = static_cast<std::size_t>(i - 1);
    for (int j = 0; j <= n - i; ++j) A(col + static_cast<std::size_t>(j), col) = binomial(n - i, j) * a.pow(j);
    for (int j = 0; j <= i - 1; ++j) B(col - static_cast<std::size_t>(j), col) = binomial(i - 1, j) * a.pow(j);
    C(col, col) = a.pow(n - 2 * i + 1);
  }
  return {A, B, C};
}

namespace {

// Matrix of the substitution (x, y) -> (x, y) M on the forms x^(n-i) y^(i-1).
RationalMatrix symmetric_power(const RationalMatrix& m, int n) {
  const VarSpace plane = VarSpace::plain(2);
  const Polynomial x = Polynomial::x(plane, 1);
  const Polynomial y = Polynomial::x(plane, 2);
  const std::vector<Polynomial> images{x * m(0, 0) + y * m(1, 0), x * m(0, 1) + y * m(1, 1)};
  const auto size = static_cast<std::size_t>(n);
  RationalMatrix out(size, size);
  for (int i = 1; i <= n; ++i) {
    const Polynomial form = pow(x, static_cast<std::uint32_t>(n - i)) * pow(y, static_cast<std::uint32_t>(i - 1));
    const Polynomial image = substitute(form, images);
    for (int r = 1; r <= n; ++r) {
      Monomial basis;
      basis.set(0, static_cast<std::uint32_t>(n - r));
      basis.set(1, static_cast<std::uint32_t>(r - 1));
      out(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(i - 1)) = image.coefficient(basis);
    }
  }
  return out;
}

}  // namespace

ElMatrices el_matrices_by_expansion(const Rational& a, int n) {
  if (n < 2) fail(ErrorKind::BadDimension, "el matrices need n >= 2");
  const ElMatrices base = el_base_matrices(a);
  return {symmetric_power(base.a, n), symmetric_power(base.b, n), symmetric_power(base.c, n)};
}

void WordSpec::validate(int n) const {
  if (powers.empty()) fail(ErrorKind::ValidationError, "a word needs at least one power of phi");
  if (translations.size() + 1 != powers.size()) {
    fail(ErrorKind::ValidationError, "a word with s powers needs s-1 translations");
  }
  for (std::size_t j = 0; j < powers.size(); ++j) {
    if (powers[j] == 0) fail(ErrorKind::ValidationError, "power " + std::to_string(j + 1) + " is zero");
  }
  for (std::size_t j = 0; j < translations.size(); ++j) {
    const auto& a = translations[j];
    if (static_cast<int>(a.size()) != n) {
      fail(ErrorKind::ValidationError, "translation " + std::to_string(j + 1) + " has the wrong length");
    }
    bool nonzero = false;
    for (const auto& v : a) nonzero = nonzero || !v.is_zero();
    if (!nonzero) fail(ErrorKind::ValidationError, "translation " + std::to_string(j + 1) + " is zero");
  }
}

std::string WordSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    if (j > 0) out << " . tau" << format_rational_vector(translations[j - 1]) << " . ";
    out << "phi";
    if (powers[j] != 1) out << '^' << powers[j];
  }
  return out.str();
}

Automorphism word_chain(const WordSpec& word, int n, int l, bool lifted) {
  require_min_dimension(n);
  word.validate(n);
  Automorphism out = phi_chain(n, l, lifted, word.powers[0]);
  for (std::size_t j = 1; j < word.powers.size(); ++j) {
    out = out * translation_chain(word.translations[j - 1], lifted) * phi_chain(n, l, lifted, word.powers[j]);
  }
  return out;
}

Endomorphism evaluate_word(const WordSpec& word, int n, int l, bool lifted) {
  const Automorphism lifted_word = word_chain(word, n, l, true);
  return lifted ? lifted_word.expand() : expand_through_lift(lifted_word);
}

Polynomial word_image_by_substitution(const WordSpec& word, int n, int l, int i) {
  require_min_dimension(n);
  word.validate(n);
  if (i < 1 || i > n) fail(ErrorKind::BadParameter, "variable index out of range");
  Polynomial q = Polynomial::x(VarSpace::plain(n), i);
  for (std::size_t j = word.powers.size(); j-- > 0;) {
    q = apply_endo(expand_through_lift(phi_chain(n, l, true, word.powers[j])), q);
    if (j > 0) q = apply_endo(make_translation(word.translations[j - 1]), q);
  }
  return q;
}

Automorphism extend_chain_fixing_t(const Automorphism& g) {
  if (g.space().extended) fail(ErrorKind::SpaceMismatch, "chain already acts on k[t,x]");
  const VarSpace lifted = VarSpace::lifted(g.space().n);
  Automorphism out = Automorphism::identity(lifted);
  for (const auto& factor : g.factors()) {
    if (const auto* e = std::get_if<ExpFactor>(&factor)) {
      std::vector<Polynomial> images{Polynomial(lifted)};
      for (const auto& img : e->base.images()) images.push_back(embed(img, lifted));
      out = out * Automorphism::exponential(Derivation(lifted, std::move(images)), embed(e->coeff, lifted));
    } else {
      const auto& m = std::get<MapFactor>(factor);
      out = out * Automorphism::from_pair(extend_fixing_t(m.forward), extend_fixing_t(m.inverse));
    }
  }
  return out;
}

}  // namespace cotame
