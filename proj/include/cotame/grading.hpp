#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "cotame/constructions.hpp"
#include "cotame/polynomial.hpp"

namespace cotame {

enum class WeightKind { W1, W2, W3 };

/// Weights on k[t,x1..xn], slot 0 = t:
/// w1 = all ones, w2 = (n-2, 2n-2, 2n-3, ..., n-1), w3 = (0, 1, ..., 1).
WeightVector make_weight(WeightKind kind, int n);

enum class ClassKind { P, Q, R };

/// One of the lifted-ring degree classes P/Q/R with parameters (alpha, beta).
/// beta >= 1 always; alpha = 0 is admitted because eps~_{-t^l}(x_n) = x_n
/// needs it.
struct DegreeClassTag {
  ClassKind kind = ClassKind::P;
  long long alpha = 1;
  long long beta = 1;

  /// Throws BadParameter on alpha < 0 or beta < 1.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const DegreeClassTag&, const DegreeClassTag&) = default;
};

/// Membership test: the weighted-degree bounds of the class and the shape
/// of the lex-leading term. Throws ZeroPolynomial for p = 0 and
/// SpaceMismatch unless p lives in k[t,x].
bool in_class(const Polynomial& p, const DegreeClassTag& tag);

/// R_{a,b} -> Q_{a,b}; WrongKind on any other input.
DegreeClassTag transition_eps_prime(const DegreeClassTag& tag);
/// Q_{a,b} -> P_{a+(n-1)lb, b}; WrongKind on any other input.
DegreeClassTag transition_eps_t(const DegreeClassTag& tag, int n, int l);

/// max{i : a_i != 0} + n - 2 for odd n; 2 max{i : a_i != 0} + 4m - 4 for n = 2m.
/// Throws ZeroVector for a = 0.
long long mu_param(std::span<const Rational> a, int n);

/// One application of phi~^d o tau~_a on P_{alpha,beta}.
DegreeClassTag transition_word_step(const DegreeClassTag& tag, long long mu, int n, int l);

struct WordPrediction {
  DegreeClassTag tag;
  long long degree = 0;  // deg f * alpha + beta
};

/// Folds the word steps innermost first, starting from P_{(2n-2)l,1}.
WordPrediction word_class_predict(const WordSpec& word, int n, int l);

/// c t^alpha x_n^beta (x_1^beta for Q) plus up to 10 random lex-smaller
/// terms inside the class bounds. Deterministic for a given generator state.
Polynomial random_class_member(const DegreeClassTag& tag, int n, std::mt19937_64& rng);

}  // namespace cotame
