#include "cotame/rational.hpp"

#include <cctype>

#include "cotame/errors.hpp"

namespace cotame {

Rational::Rational(long long num, long long den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t end_num = digits(i);
  if (end_num == i) throw ParseError(i, {"digit"}, "malformed rational");
  mpz_class num(std::string(text.substr(i, end_num - i)));
  mpz_class den(1);
  i = end_num;
  if (i < text.size() && text[i] == '/') {
    std::size_t end_den = digits(i + 1);
    if (end_den == i + 1) throw ParseError(i + 1, {"digit"}, "malformed rational");
    den = mpz_class(std::string(text.substr(i + 1, end_den - i - 1)));
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    i = end_den;
  }
  if (i != text.size()) throw ParseError(i, {"end of rational"}, "trailing characters");
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

Rational Rational::pow(long long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational& Rational::add_mul(const Rational& a, const Rational& b) {
  // Integer operands are the common case in products; skip the gcd work.
  if (mpz_cmp_ui(mpq_denref(a.value_.get_mpq_t()), 1) == 0 && mpz_cmp_ui(mpq_denref(b.value_.get_mpq_t()), 1) == 0 &&
      mpz_cmp_ui(mpq_denref(value_.get_mpq_t()), 1) == 0) {
    mpz_addmul(mpq_numref(value_.get_mpq_t()), mpq_numref(a.value_.get_mpq_t()), mpq_numref(b.value_.get_mpq_t()));
    return *this;
  }
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(out));
}

Rational factorial(long long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(out));
}

}  // namespace cotame
