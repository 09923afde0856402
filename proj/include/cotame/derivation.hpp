#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cotame/polynomial.hpp"

namespace cotame {

/// k-derivation determined by the image of each variable slot.
class Derivation {
 public:
  /// Throws ArityMismatch/SpaceMismatch unless there is one image per slot,
  /// all in `space`.
  Derivation(VarSpace space, std::vector<Polynomial> images);

  static Derivation zero(VarSpace space);

  const VarSpace& space() const { return space_; }
  std::span<const Polynomial> images() const { return images_; }
  const Polynomial& image(int slot) const { return images_[static_cast<std::size_t>(slot)]; }

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  VarSpace space_;
  std::vector<Polynomial> images_;
};

/// Leibniz extension: sum over slots of dp/dv * D(v).
Polynomial apply(const Derivation& d, const Polynomial& p);
Polynomial power_apply(const Derivation& d, std::uint32_t k, const Polynomial& p);
bool kernel_member(const Derivation& d, const Polynomial& p);

/// p * D. Does not check p in ker D.
Derivation scale(const Derivation& d, const Polynomial& p);

/// (slots + 1) * (1 + deg p) * (1 + max image degree): enough iterations for
/// every locally nilpotent derivation this library builds.
std::uint64_t default_exp_cap(const Derivation& d, const Polynomial& p);

/// sum_k D^k(p) / k!, stopping at the first zero power. Throws ExpDiverged
/// when `cap` iterations pass without reaching zero.
Polynomial exp_apply(const Derivation& d, const Polynomial& p, std::uint64_t cap);
Polynomial exp_apply(const Derivation& d, const Polynomial& p);

/// exp(coeff * D)(p) for coeff in ker D, computed as sum_k coeff^k D^k(p)/k!
/// without forming the scaled derivation. Same result as
/// exp_apply(scale(d, coeff), p) under that precondition.
Polynomial exp_apply_kernel(const Derivation& d, const Polynomial& coeff, const Polynomial& p);

/// An ordering of the variable slots under which every D(v) only involves
/// earlier slots, or nullopt when none exists. A returned order certifies
/// that D is locally nilpotent. Ties resolve to the lowest slot first.
std::optional<std::vector<int>> triangular_certificate(const Derivation& d);

}  // namespace cotame
