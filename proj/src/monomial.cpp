#include "cotame/monomial.hpp"

#include "cotame/errors.hpp"

namespace cotame {

namespace {

constexpr std::uint64_t kHighBits = 0x8000800080008000ULL;

}  // namespace

std::string VarSpace::slot_name(int slot) const {
  if (extended) return slot == 0 ? "t" : "x" + std::to_string(slot);
  return "x" + std::to_string(slot + 1);
}

void VarSpace::validate() const {
  if (n < 1 || slots() > kMaxSlots) {
    fail(ErrorKind::BadDimension, "unsupported number of variables n=" + std::to_string(n));
  }
}

void Monomial::set(int slot, std::uint32_t exponent) {
  if (exponent > kMaxExponent) fail(ErrorKind::ExponentOverflow, "exponent too large");
  auto& w = words_[slot >> 2];
  const int s = shift(slot);
  w = (w & ~(0xFFFFULL << s)) | (static_cast<std::uint64_t>(exponent) << s);
}

std::uint32_t Monomial::degree() const {
  std::uint32_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::uint32_t>((w & 0xFFFF) + ((w >> 16) & 0xFFFF) + ((w >> 32) & 0xFFFF) +
                                        (w >> 48));
  }
  return total;
}

std::uint64_t Monomial::weighted_degree(std::span<const std::uint32_t> weights) const {
  std::uint64_t total = 0;
  for (std::size_t slot = 0; slot < weights.size(); ++slot) {
    total += static_cast<std::uint64_t>(weights[slot]) * (*this)[static_cast<int>(slot)];
  }
  return total;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  std::uint64_t overflow = 0;
  for (int i = 0; i < 4; ++i) {
    out.words_[i] = words_[i] + o.words_[i];
    overflow |= out.words_[i];
  }
  if (overflow & kHighBits) fail(ErrorKind::ExponentOverflow, "monomial product overflows");
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  for (int slot = 0; slot < kMaxSlots; ++slot) {
    if ((*this)[slot] > o[slot]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial out;
  for (int i = 0; i < 4; ++i) out.words_[i] = words_[i] - o.words_[i];
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (auto w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

}  // namespace cotame
