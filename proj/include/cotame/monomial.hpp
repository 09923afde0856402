#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace cotame {

/// Maximum number of variable slots (t plus x1..x15).
inline constexpr int kMaxSlots = 16;
inline constexpr std::uint32_t kMaxExponent = 0x7FFF;

/// The ring a value lives in: k[x1..xn] or, when `extended`, k[t,x1..xn].
/// Slot 0 is t in the extended ring; x_i sits at slot i (extended) or i-1.
struct VarSpace {
  int n = 0;
  bool extended = false;

  static VarSpace plain(int n) { return VarSpace{n, false}; }
  static VarSpace lifted(int n) { return VarSpace{n, true}; }

  int slots() const { return n + (extended ? 1 : 0); }
  int x_slot(int i) const { return extended ? i : i - 1; }
  std::string slot_name(int slot) const;

  /// Throws BadDimension unless 1 <= n and the slots fit.
  void validate() const;

  friend bool operator==(const VarSpace&, const VarSpace&) = default;
};

/// Exponent vector packed four slots per 64-bit word, slot 0 in the top
/// bits of word 0. Plain lexicographic comparison of the words is then the
/// lexicographic monomial order with slot 0 most significant.
class Monomial {
 public:
  Monomial() = default;

  static Monomial unit(int slot, std::uint32_t exponent = 1) {
    Monomial m;
    m.set(slot, exponent);
    return m;
  }

  std::uint32_t operator[](int slot) const {
    return static_cast<std::uint32_t>((words_[slot >> 2] >> shift(slot)) & 0xFFFFu);
  }

  /// Throws ExponentOverflow above kMaxExponent.
  void set(int slot, std::uint32_t exponent);

  std::uint32_t degree() const;
  std::uint64_t weighted_degree(std::span<const std::uint32_t> weights) const;
  bool is_one() const { return words_ == std::array<std::uint64_t, 4>{}; }

  /// Throws ExponentOverflow when any slot would exceed kMaxExponent.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const;

  std::size_t hash() const;
  const std::array<std::uint64_t, 4>& words() const { return words_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.words_ <=> b.words_;
  }

 private:
  static int shift(int slot) { return 48 - 16 * (slot & 3); }

  std::array<std::uint64_t, 4> words_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace cotame
