#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cotame/monomial.hpp"
#include "cotame/rational.hpp"

namespace cotame {

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Per-slot weights over the extended ring, slot 0 = t.
struct WeightVector {
  std::vector<std::uint32_t> entries;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Sparse polynomial over Q. Terms are kept strictly descending in lex
/// order (slot 0 most significant) with no zero coefficients, so equal
/// polynomials have identical term vectors.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarSpace space) : space_(space) {}

  static Polynomial constant(VarSpace space, const Rational& c);
  static Polynomial monomial(VarSpace space, const Monomial& m, const Rational& c);
  static Polynomial var(VarSpace space, int slot);
  /// x_i, 1-based.
  static Polynomial x(VarSpace space, int i);
  static Polynomial t(VarSpace space);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(VarSpace space, std::vector<Term> terms);
  /// Caller guarantees `terms` is already canonical.
  static Polynomial from_sorted(VarSpace space, std::vector<Term> terms);

  const VarSpace& space() const { return space_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest exponent of `slot` over the support (0 for the zero polynomial).
  std::uint32_t degree_in(int slot) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  VarSpace space_;
  std::vector<Term> terms_;
};

/// Throws SpaceMismatch unless both operands share one ring.
void require_same_space(const VarSpace& a, const VarSpace& b, const char* what);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, std::uint32_t e);
/// p * m for a single monomial (order preserving, no merging needed).
Polynomial mul_monomial(const Polynomial& p, const Monomial& m, const Rational& c);

std::uint32_t total_degree(const Polynomial& p);
std::uint64_t weighted_degree(const Polynomial& p, const WeightVector& w);
/// Maximal term under lex with slot 0 (t when extended) most significant.
Term leading_term(const Polynomial& p);

/// Ring homomorphism sending the variable in slot i to images[i].
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);
Polynomial derivative(const Polynomial& p, int slot);

/// Views p inside a larger ring: x_i keeps its index, t must exist in the
/// target if p mentions it.
Polynomial embed(const Polynomial& p, VarSpace target);

}  // namespace cotame
