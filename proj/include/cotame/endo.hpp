#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cotame/derivation.hpp"
#include "cotame/matrix.hpp"
#include "cotame/polynomial.hpp"

namespace cotame {

/// k-algebra endomorphism given by the image of every variable slot.
/// Composition follows (g o h)(v) = g(h(v)).
class Endomorphism {
 public:
  Endomorphism(VarSpace space, std::vector<Polynomial> images);

  static Endomorphism identity(VarSpace space);

  const VarSpace& space() const { return space_; }
  std::span<const Polynomial> images() const { return images_; }
  const Polynomial& image(int slot) const { return images_[static_cast<std::size_t>(slot)]; }
  /// Image of x_i, 1-based.
  const Polynomial& image_x(int i) const { return image(space_.x_slot(i)); }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  VarSpace space_;
  std::vector<Polynomial> images_;
};

/// (x_1..x_n) A + b: column j of `matrix` holds the linear part of the
/// image of slot j.
struct AffineForm {
  RationalMatrix matrix;
  std::vector<Rational> offset;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

Polynomial apply_endo(const Endomorphism& g, const Polynomial& p);
Endomorphism compose(const Endomorphism& g, const Endomorphism& h);
bool endo_equal(const Endomorphism& g, const Endomorphism& h);

std::optional<AffineForm> as_affine(const Endomorphism& g);
Endomorphism from_affine(VarSpace space, const AffineForm& form);
bool is_triangular(const Endomorphism& g);

Endomorphism make_translation(std::span<const Rational> a);
/// (a^(n-1) x1, ..., a^(n-2i+1) x_i, ..., a^(-n+1) x_n); throws ZeroScalar for a = 0.
Endomorphism make_mu(const Rational& a, int n);
/// (b x1, ..., b x_n); throws ZeroScalar for b = 0.
Endomorphism make_nu(const Rational& b, int n);
/// x_i -> x_(n-i+1).
Endomorphism make_sigma(int n);

/// exp(coeff * D) as an endomorphism. Throws NotInKernel unless D(coeff) = 0.
Endomorphism exp_endo(const Derivation& d, const Polynomial& coeff);

/// t -> f, x_i -> x_i, from k[t,x] onto k[x].
Polynomial substitution_pi(const Polynomial& p, const Polynomial& f);
/// (t + tau_a(f) - f, x1 + a1, ..., xn + an) on k[t,x].
Endomorphism lift_translation(std::span<const Rational> a, const Polynomial& f);

/// Extends g on k[x] to k[t,x] with t fixed.
Endomorphism extend_fixing_t(const Endomorphism& g);

/// Inverse of a triangular map, solved variable by variable.
/// Throws NoInverseAvailable when g is not triangular.
Endomorphism triangular_inverse(const Endomorphism& g);

nlohmann::json endo_to_json(const Endomorphism& g);

/// One factor of a structured automorphism.
struct ExpFactor {
  Derivation base;
  Polynomial coeff;  // in ker base; the factor is exp(coeff * base)
};

struct MapFactor {
  Endomorphism forward;
  Endomorphism inverse;
};

using Factor = std::variant<ExpFactor, MapFactor>;

/// Automorphism kept as a product F_0 o F_1 o ... o F_k of factors with
/// known inverses. Applying it runs the factors right to left, and
/// exponential factors go through their derivation series rather than
/// through substitution.
class Automorphism {
 public:
  explicit Automorphism(VarSpace space) : space_(space) {}

  static Automorphism identity(VarSpace space) { return Automorphism(space); }
  /// Throws NotInKernel unless base(coeff) = 0.
  static Automorphism exponential(const Derivation& base, const Polynomial& coeff);
  /// Caller guarantees forward o inverse = id.
  static Automorphism from_pair(Endomorphism forward, Endomorphism inverse);
  /// Affine maps invert through their matrix, triangular maps variable by
  /// variable; anything else throws NoInverseAvailable.
  static Automorphism from_endomorphism(const Endomorphism& g);

  const VarSpace& space() const { return space_; }
  std::span<const Factor> factors() const { return factors_; }

  Automorphism inverse() const;
  Polynomial apply(const Polynomial& p) const;
  Endomorphism expand() const;

  /// this o other
  Automorphism then_apply(const Automorphism& other) const;
  friend Automorphism operator*(const Automorphism& g, const Automorphism& h) { return g.then_apply(h); }

 private:
  VarSpace space_;
  std::vector<Factor> factors_;
};

}  // namespace cotame
