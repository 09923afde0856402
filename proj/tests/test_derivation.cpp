#include <doctest.h>

#include <random>

#include "cotame/constructions.hpp"
#include "cotame/errors.hpp"
#include "support.hpp"

using namespace cotame;
using namespace testing_support;

TEST_CASE("apply follows the defining images") {
  const Derivation d = make_D(3);
  CHECK(apply(d, P("x1", 3)) == P("2*x2", 3));
  CHECK(apply(d, make_f(3)).is_zero());
  for (int n = 3; n <= 6; ++n) CHECK(apply(make_Dprime(n), P("x1", n)).is_zero());
}

TEST_CASE("power_apply") {
  const Derivation d4 = make_D(4);
  const Polynomial f3 = embed(make_f(3), VarSpace::plain(4));
  CHECK(power_apply(d4, 3, f3).is_zero());
  CHECK(power_apply(make_D(3), 2, P("x1", 3)) == P("2*x3", 3));
  CHECK(power_apply(make_D(3), 0, P("x1 + x2", 3)) == P("x1 + x2", 3));
}

TEST_CASE("kernel membership") {
  CHECK(kernel_member(make_D(5), make_f(5)));
  CHECK(kernel_member(make_Dprime(4), make_f(4)));
  CHECK_FALSE(kernel_member(make_D(3), P("x1", 3)));
}

TEST_CASE("scale") {
  const Derivation d = make_D(3);
  const Polynomial f = make_f(3);
  CHECK(scale(d, f).image(0) == f * P("2*x2", 3));
  CHECK(scale(d, Polynomial(VarSpace::plain(3))) == Derivation::zero(VarSpace::plain(3)));
  CHECK(scale(d, P("1", 3)) == d);
}

TEST_CASE("Leibniz rule on random inputs") {
  std::mt19937_64 rng(23);
  const VarSpace s = VarSpace::plain(4);
  for (const Derivation& d : {make_D(4), make_Dprime(4), scale(make_D(4), make_f(4))}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial p = random_poly(rng, s, 5, 3);
      const Polynomial q = random_poly(rng, s, 5, 3);
      CHECK(apply(d, p * q) == p * apply(d, q) + apply(d, p) * q);
    }
  }
}

TEST_CASE("exp examples") {
  const Polynomial a = P("5/3", 3);
  CHECK(exp_apply(scale(make_D(3), a), P("x1", 3)) == P("x1 + 10/3*x2 + 25/9*x3", 3));
  const Polynomial f = make_f(3);
  CHECK(exp_apply(scale(make_D(3), f), P("x3", 3)) == P("x3", 3));
  CHECK(exp_apply(scale(make_D(3), f), P("x1", 3)) == P("x1", 3) + P("2*x2", 3) * f + P("x3", 3) * f * f);
}

TEST_CASE("exp is a ring homomorphism") {
  std::mt19937_64 rng(29);
  const VarSpace s = VarSpace::plain(3);
  const Derivation fd = scale(make_D(3), make_f(3));
  for (const Derivation& d : {make_D(3), make_Dprime(3), fd}) {
    for (int trial = 0; trial < 6; ++trial) {
      const Polynomial p = random_poly(rng, s, 4, 2);
      const Polynomial q = random_poly(rng, s, 4, 2);
      CHECK(exp_apply(d, p * q) == exp_apply(d, p) * exp_apply(d, q));
    }
  }
}

TEST_CASE("exp is additive in kernel coefficients") {
  const VarSpace s = VarSpace::plain(3);
  const Derivation d = make_D(3);
  const Polynomial f = make_f(3);
  const std::vector<Polynomial> coeffs{P("2", 3), P("-1/2", 3), f, f * f};
  for (const auto& p : coeffs) {
    for (const auto& q : coeffs) {
      for (int i = 1; i <= 3; ++i) {
        const Polynomial x = Polynomial::x(s, i);
        // exp(pD)(exp(qD)(x)) substitutes the images of exp(pD) into exp(qD)(x).
        std::vector<Polynomial> p_images;
        for (int j = 1; j <= 3; ++j) p_images.push_back(exp_apply(scale(d, p), Polynomial::x(s, j)));
        CHECK(substitute(exp_apply(scale(d, q), x), p_images) == exp_apply(scale(d, p + q), x));
      }
    }
  }
}

TEST_CASE("powers of a scaled derivation factor through the kernel element") {
  const Derivation d = make_D(4);
  const Polynomial f = make_f(4);
  const Derivation fd = scale(d, f);
  for (int i = 1; i <= 4; ++i) {
    const Polynomial x = Polynomial::x(VarSpace::plain(4), i);
    for (std::uint32_t k = 0; k <= 4; ++k) CHECK(power_apply(fd, k, x) == pow(f, k) * power_apply(d, k, x));
  }
}

TEST_CASE("exp_apply_kernel matches the scaled series") {
  const Derivation d = make_D(3);
  const Polynomial f = make_f(3);
  std::mt19937_64 rng(31);
  for (const Polynomial& c : {P("3", 3), f, P("-2", 3) * f * f}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Polynomial p = random_poly(rng, VarSpace::plain(3), 4, 3);
      CHECK(exp_apply_kernel(d, c, p) == exp_apply(scale(d, c), p));
    }
  }
}

TEST_CASE("non-nilpotent derivations hit the cap") {
  const VarSpace s = VarSpace::plain(1);
  const Derivation euler(s, {P("x1", 1)});
  CHECK_THROWS_AS(exp_apply(euler, P("x1", 1), 20), Error);
  try {
    exp_apply(euler, P("x1", 1), 5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExpDiverged);
  }
}

TEST_CASE("triangular certificates") {
  const auto rev = triangular_certificate(make_D(4));
  REQUIRE(rev.has_value());
  CHECK(*rev == std::vector<int>{3, 2, 1, 0});
  const auto id = triangular_certificate(make_Dprime(4));
  REQUIRE(id.has_value());
  CHECK(*id == std::vector<int>{0, 1, 2, 3});
  const Derivation euler(VarSpace::plain(1), {P("x1", 1)});
  CHECK_FALSE(triangular_certificate(euler).has_value());
  const Derivation cycle(VarSpace::plain(2), {P("x2", 2), P("x1", 2)});
  CHECK_FALSE(triangular_certificate(cycle).has_value());
  // The extended derivations kill t, which therefore comes first.
  const auto ext = triangular_certificate(make_D(3, true));
  REQUIRE(ext.has_value());
  CHECK(ext->front() == 0);
}

TEST_CASE("arity and space errors") {
  CHECK_THROWS_AS(Derivation(VarSpace::plain(2), {P("x1", 2)}), Error);
  CHECK_THROWS_AS(apply(make_D(3), P("x1", 4)), Error);
  CHECK_THROWS_AS(make_D(1), Error);
}
