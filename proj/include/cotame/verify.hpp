#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cotame/constructions.hpp"
#include "cotame/grading.hpp"

namespace cotame {

/// Outcome of one executable check. A failed report always carries both
/// sides of the identity that failed in `witness`.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool passed = false;
  std::optional<std::string> witness;
  /// Extra facts worth printing, e.g. the measured degree of a word.
  std::vector<std::pair<std::string, std::string>> details;
  double elapsed_seconds = 0.0;
};

/// Timing is left out unless asked for so that reports are byte-stable.
nlohmann::json report_to_json(const CheckReport& report, bool include_timing = false);
nlohmann::json reports_to_json(const std::vector<CheckReport>& reports, bool include_timing = false);
std::string report_to_text(const CheckReport& report);

CheckReport check_theorem2(int n);
/// All four commutation rules for mu_a, nu_a against eps_{b f^l} and eps'_b.
CheckReport check_lemma1(int n, int l, const Rational& a, const Rational& b);
CheckReport check_lemma2(int n, const Rational& a);
CheckReport check_sigma(int n, int l, const Rational& u);
/// phi~^d(x_i) in P_{(2n-i-1)l,1} for every i, and eps~_{-t^l}(x_i) in R_{(n-i)l,1}.
CheckReport check_phi_classes(int n, int l, long long d);

/// Word certification: theta~(x1) lies in the predicted class, theta(x1)
/// (computed on k[x] by substitution) has the predicted degree, equals
/// pi(theta~(x1)), and so theta is not affine.
CheckReport check_word(const WordSpec& word, int n, int l);

/// Decides whether g o tau_{c a} o g^{-1} is affine in x for a free scalar c.
/// Throws AffineInput for affine g and ZeroVector for a = 0.
bool check_el_dagger(const Automorphism& g, const std::vector<Rational>& a);
CheckReport check_el_dagger_report(const std::string& label, const Automorphism& g,
                                   const std::vector<Rational>& a, bool expected);

/// Derksen's triangular map (x1, x2, x3 + x1^2).
Automorphism derksen_map();

struct CorpusWord {
  WordSpec word;
  int n = 3;
  int l = 1;
};

/// Seeded word corpus inside the default bounds (s <= 3, |i_j| <= 2,
/// translation entries in -2..2, n in {3,4}, l = 1). Words are distinct.
/// Composition per 50 words: every n=4 and n=3 word with s=1, two n=3
/// words with s=3, the rest n=3 with s=2 (see README for why).
std::vector<CorpusWord> word_corpus(std::uint64_t seed, std::size_t count = 50);

/// Seeded nonzero rationals p/q with |p| <= 5, 1 <= q <= 4.
std::vector<Rational> seeded_rationals(std::uint64_t seed, std::size_t count, bool allow_zero);
/// Seeded nonzero vectors with entries in -2..2.
std::vector<std::vector<Rational>> seeded_directions(std::uint64_t seed, std::size_t count, int n);

enum class GridPreset { Empty, Quick, Default };

/// Parses "empty", "quick" or "default"; throws BadParameter otherwise.
GridPreset parse_grid(const std::string& name);

/// Runs every check of the preset concurrently. The result order is the
/// grid order, independent of scheduling.
std::vector<CheckReport> run_suite(std::uint64_t seed, GridPreset grid);

}  // namespace cotame
