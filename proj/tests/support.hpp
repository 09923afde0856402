#pragma once

// Test-side oracles. Nothing here calls the library's substitution or
// exponential code: polynomials are evaluated term by term at rational
// points, and the named maps are re-implemented as point maps.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cotame/errors.hpp"
#include "cotame/parse.hpp"
#include "cotame/polynomial.hpp"

namespace testing_support {

using cotame::Polynomial;
using cotame::Rational;
using cotame::VarSpace;
using Point = std::vector<Rational>;

/// Kind of the cotame::Error thrown by fn; fails the calling test otherwise.
template <class Fn>
std::optional<cotame::ErrorKind> thrown_kind(Fn&& fn) {
  try {
    fn();
  } catch (const cotame::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline Polynomial P(const std::string& text, int n, bool lifted = false) {
  return cotame::parse_poly(text, lifted ? VarSpace::lifted(n) : VarSpace::plain(n));
}

/// Value of p at a point given slot by slot.
inline Rational eval_at(const Polynomial& p, const Point& slots) {
  Rational sum(0);
  for (const auto& term : p.terms()) {
    Rational value = term.coeff;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto e = term.mono[static_cast<int>(s)];
      if (e > 0) value *= slots[s].pow(e);
    }
    sum += value;
  }
  return sum;
}

inline Rational binom(long long n, long long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational out(1);
  for (long long j = 1; j <= k; ++j) out = out * Rational(n - k + j) / Rational(j);
  return out;
}

/// f_[n] evaluated directly from its defining sums (odd n), or from the
/// hand-expanded D(f')^2 - 2 D^2(f') f' pattern computed numerically (even n).
inline Rational f_at(const Point& x) {
  const int n = static_cast<int>(x.size());
  auto odd = [&](int nn) {
    const int m = (nn + 1) / 2;
    Rational s(0);
    for (int i = 1; i <= 2 * m - 1; ++i) {
      Rational c = binom(2 * m - 2, i - 1) * x[static_cast<std::size_t>(i - 1)] * x[static_cast<std::size_t>(2 * m - i - 1)];
      s += (i % 2 == 0) ? -c : c;
    }
    return s * Rational(1, 2);
  };
  if (n % 2 == 1) return odd(n);
  // f' = sum_i c_i x_i x_{2m-i}; D x_j = (n-j) x_{j+1}. D(f') and D^2(f')
  // are quadratic forms whose values follow from the product rule.
  const int m = n / 2;
  auto dx = [&](int j, int k) -> Rational {  // value of D^k(x_j)
    Rational c(1);
    for (int s = 0; s < k; ++s) c *= Rational(n - j - s);
    if (j + k > n) return Rational(0);
    return c * x[static_cast<std::size_t>(j + k - 1)];
  };
  Rational f0(0), f1(0), f2(0);
  for (int i = 1; i <= 2 * m - 1; ++i) {
    Rational c = binom(2 * m - 2, i - 1) * Rational(1, 2);
    if (i % 2 == 0) c = -c;
    const int j = i, k = 2 * m - i;
    f0 += c * dx(j, 0) * dx(k, 0);
    f1 += c * (dx(j, 1) * dx(k, 0) + dx(j, 0) * dx(k, 1));
    f2 += c * (dx(j, 2) * dx(k, 0) + Rational(2) * dx(j, 1) * dx(k, 1) + dx(j, 0) * dx(k, 2));
  }
  return f1 * f1 - Rational(2) * f2 * f0;
}

/// Point map of eps_{c f^l}: x_i -> sum_k C(n-i,k) (c f^l)^k x_{i+k}.
inline Point eps_point(const Point& x, const Rational& c, int l) {
  const int n = static_cast<int>(x.size());
  const Rational p = c * f_at(x).pow(l);
  Point out(x.size());
  for (int i = 1; i <= n; ++i) {
    Rational s(0);
    for (int k = 0; k <= n - i; ++k) s += binom(n - i, k) * p.pow(k) * x[static_cast<std::size_t>(i + k - 1)];
    out[static_cast<std::size_t>(i - 1)] = s;
  }
  return out;
}

/// Point map of eps'_c: x_i -> sum_k C(i-1,k) c^k x_{i-k}.
inline Point eps_prime_point(const Point& x, const Rational& c) {
  const int n = static_cast<int>(x.size());
  Point out(x.size());
  for (int i = 1; i <= n; ++i) {
    Rational s(0);
    for (int k = 0; k <= i - 1; ++k) s += binom(i - 1, k) * c.pow(k) * x[static_cast<std::size_t>(i - k - 1)];
    out[static_cast<std::size_t>(i - 1)] = s;
  }
  return out;
}

/// Point map of phi^d = eps_{f^l} o eps'_d o eps_{-f^l}. For g o h the point
/// map runs g first, so eps_{f^l} acts first on the point.
inline Point phi_point(const Point& x, int l, long long d) {
  return eps_point(eps_prime_point(eps_point(x, Rational(1), l), Rational(d)), Rational(-1), l);
}

inline Point translate_point(const Point& x, const std::vector<Rational>& a) {
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + a[i];
  return out;
}

inline Point random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  Point p;
  for (int i = 0; i < n; ++i) p.emplace_back(num(rng), den(rng));
  return p;
}

inline Polynomial random_poly(std::mt19937_64& rng, VarSpace space, int terms, int max_exp) {
  std::uniform_int_distribution<int> coeff(-9, 9), den(1, 3), ex(0, max_exp);
  std::vector<cotame::Term> out;
  for (int k = 0; k < terms; ++k) {
    cotame::Monomial m;
    for (int s = 0; s < space.slots(); ++s) m.set(s, static_cast<std::uint32_t>(ex(rng)));
    out.push_back({m, Rational(coeff(rng), den(rng))});
  }
  return Polynomial::from_terms(space, std::move(out));
}

}  // namespace testing_support
