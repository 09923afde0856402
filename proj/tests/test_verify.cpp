#include <doctest.h>

#include <set>

#include "cotame/verify.hpp"
#include "support.hpp"

using namespace cotame;
using namespace testing_support;

namespace {

std::vector<Rational> vec(std::initializer_list<long long> v) {
  std::vector<Rational> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

std::string detail(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details) {
    if (k == key) return v;
  }
  return "<missing>";
}

}  // namespace

TEST_CASE("f lies in ker D and ker D'") {
  CHECK(check_theorem2(3).passed);
  CHECK(check_theorem2(6).passed);
  CHECK(thrown_kind([] { check_theorem2(2); }) == ErrorKind::BadDimension);
}

TEST_CASE("mu and nu commutation rules, symmetric-power identity") {
  CHECK(check_lemma1(3, 1, Rational(2), Rational(1)).passed);
  CHECK(check_lemma1(4, 2, Rational(-1, 3), Rational(5, 2)).passed);
  CHECK(check_lemma1(3, 1, Rational(3), Rational(0)).passed);
  CHECK(thrown_kind([] { check_lemma1(3, 1, Rational(0), Rational(1)); }) == ErrorKind::BadParameter);
  CHECK(check_lemma2(3, Rational(2)).passed);
  CHECK(check_lemma2(5, Rational(3, 5)).passed);
  CHECK(thrown_kind([] { check_lemma2(3, Rational(0)); }) == ErrorKind::BadParameter);
}

TEST_CASE("mu_2 o eps_f by hand") {
  // mu_2(eps_f(x1)) with f = x1x3 - x2^2: both sides send x1 to the same image.
  const Endomorphism lhs = compose(make_mu(Rational(2), 3), exp_endo(make_D(3), make_f(3)));
  const Endomorphism rhs = compose(exp_endo(make_D(3), make_f(3) * Rational(1, 4)), make_mu(Rational(2), 3));
  CHECK(lhs == rhs);
}

TEST_CASE("sigma identity") {
  const CheckReport r = check_sigma(3, 1, Rational(2));
  CHECK(r.passed);
  CHECK(detail(r, "coefficient") == "-15");
  CHECK(detail(r, "eps") == "eps_{-15*f^1}");
  CHECK(detail(check_sigma(3, 2, Rational(2)), "coefficient") == "-255");
  CHECK(thrown_kind([] { check_sigma(3, 1, Rational(1)); }) == ErrorKind::BadParameter);
}

TEST_CASE("phi classes") {
  CHECK(check_phi_classes(3, 1, 1).passed);
  CHECK(check_phi_classes(4, 1, -2).passed);
}

TEST_CASE("word certification") {
  const CheckReport single = check_word(WordSpec{{1}, {}}, 3, 1);
  CHECK(single.passed);
  CHECK(detail(single, "degree") == "9");
  const CheckReport two = check_word(WordSpec{{1, 1}, {vec({1, 0, 0})}}, 3, 1);
  CHECK(two.passed);
  CHECK(detail(two, "degree") == "25");
  CHECK(detail(two, "class") == "P(10,5)");
  CHECK(detail(two, "non_affine") == "true");
  CHECK(thrown_kind([] { check_word(WordSpec{{1, 1}, {vec({0, 0, 0})}}, 3, 1); }) == ErrorKind::ValidationError);
  const CheckReport even = check_word(WordSpec{{-1}, {}}, 4, 1);
  CHECK(even.passed);
  CHECK(detail(even, "degree") == "25");
}

TEST_CASE("dagger condition") {
  CHECK(check_el_dagger(derksen_map(), vec({0, 0, 1})));
  CHECK_FALSE(check_el_dagger(phi_chain(3, 1, false), vec({1, 0, 0})));
  CHECK_FALSE(check_el_dagger(phi_chain(3, 1, false), vec({0, 0, 1})));
  CHECK(thrown_kind([] { check_el_dagger(mu_chain(Rational(2), 3, false), vec({1, 0, 0})); }) == ErrorKind::AffineInput);
  CHECK(thrown_kind([] { check_el_dagger(derksen_map(), vec({0, 0, 0})); }) == ErrorKind::ZeroVector);
  CHECK(check_el_dagger_report("derksen", derksen_map(), vec({0, 0, 1}), true).passed);
  const CheckReport wrong = check_el_dagger_report("derksen", derksen_map(), vec({0, 0, 1}), false);
  CHECK_FALSE(wrong.passed);
  CHECK(wrong.witness.has_value());
}

TEST_CASE("failed reports carry a witness") {
  const CheckReport r = check_el_dagger_report("phi", phi_chain(3, 1, false), vec({1, 0, 0}), true);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->find("expected") != std::string::npos);
}

TEST_CASE("report rendering") {
  const CheckReport r = check_theorem2(3);
  const auto j = report_to_json(r);
  CHECK(j["name"] == "theorem2");
  CHECK(j["passed"] == true);
  CHECK(j["witness"].is_null());
  CHECK_FALSE(j.contains("elapsed_seconds"));
  CHECK(report_to_json(r, true).contains("elapsed_seconds"));
  CHECK(report_to_text(r).rfind("PASS theorem2 n=3", 0) == 0);
}

TEST_CASE("word corpus") {
  const auto corpus = word_corpus(7);
  CHECK(corpus.size() == 50);
  std::set<std::string> seen;
  int n4 = 0;
  for (const auto& w : corpus) {
    CHECK_NOTHROW(w.word.validate(w.n));
    CHECK(w.word.length() <= 3);
    CHECK(w.l == 1);
    CHECK((w.n == 3 || w.n == 4));
    for (long long p : w.word.powers) CHECK((p != 0 && p >= -2 && p <= 2));
    for (const auto& a : w.word.translations) {
      for (const auto& x : a) CHECK((x >= Rational(-2) && x <= Rational(2)));
    }
    n4 += w.n == 4;
    seen.insert(std::to_string(w.n) + ":" + w.word.to_string());
  }
  CHECK(seen.size() == corpus.size());
  CHECK(n4 > 0);
  CHECK(word_corpus(7).size() == 50);
  bool same = true;
  const auto again = word_corpus(7);
  for (std::size_t k = 0; k < corpus.size(); ++k) same &= corpus[k].word == again[k].word;
  CHECK(same);
}

TEST_CASE("seeded samples") {
  CHECK(seeded_rationals(3, 20, false) == seeded_rationals(3, 20, false));
  for (const auto& r : seeded_rationals(3, 50, false)) CHECK(r != Rational(0));
  for (const auto& a : seeded_directions(3, 20, 3)) {
    bool nonzero = false;
    for (const auto& x : a) nonzero |= x != Rational(0);
    CHECK(nonzero);
  }
}

TEST_CASE("suite") {
  CHECK(parse_grid("quick") == GridPreset::Quick);
  CHECK(thrown_kind([] { parse_grid("huge"); }) == ErrorKind::BadParameter);
  CHECK(run_suite(1, GridPreset::Empty).empty());
  const auto a = run_suite(1, GridPreset::Quick);
  const auto b = run_suite(2, GridPreset::Quick);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    INFO(report_to_text(a[k]));
    CHECK(a[k].passed);
    CHECK(a[k].name == b[k].name);
    CHECK(a[k].passed == b[k].passed);
  }
  CHECK(reports_to_json(a) == reports_to_json(run_suite(1, GridPreset::Quick)));
}
