#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cotame {

/// Exact element of Q, always kept in lowest terms with a positive
/// denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(long long num, long long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts `int` or `int/posint`, optional leading sign.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  /// Integer power; negative exponents invert (throws DivisionByZero on 0).
  Rational pow(long long exponent) const;
  Rational inverse() const;

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);
  /// *this += a * b without a temporary Rational.
  Rational& add_mul(const Rational& a, const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// n choose k as an exact integer (0 when k > n).
Rational binomial(long long n, long long k);
Rational factorial(long long n);

}  // namespace cotame
