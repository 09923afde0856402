#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cotame/derivation.hpp"
#include "cotame/endo.hpp"
#include "cotame/matrix.hpp"

namespace cotame {

/// D = sum_{j<n} (n-j) x_{j+1} d/dx_j. On k[t,x] it kills t.
Derivation make_D(int n, bool extended = false);
/// sigma o D o sigma, cross-checked against sum_{j>=2} (j-1) x_{j-1} d/dx_j.
Derivation make_Dprime(int n, bool extended = false);
Derivation make_Dprime_closed_form(int n, bool extended = false);
/// The derivation v -> sigma(D(sigma(v))).
Derivation conjugate_by_sigma(const Derivation& d);

/// The kernel polynomial f_[n] in k[x1..xn], n >= 3.
Polynomial make_f(int n);
/// deg f_[n]: 2 for odd n, 4 for even n.
int f_degree(int n);

/// eps_p = exp(p D) and eps'_q = exp(q D'); p, q may live in k[x] or k[t,x].
Automorphism make_eps(const Polynomial& p);
Automorphism make_eps_prime(const Polynomial& q);

/// phi^power = eps_{f^l} o eps'_power o eps_{-f^l}; lifted uses t^l for f^l.
/// power = -1 gives the inverse eps_{f^l} o eps'_{-1} o eps_{-f^l}.
Automorphism phi_chain(int n, int l, bool lifted, long long power = 1);

/// Translation as an automorphism; the lifted form is exp of the
/// derivation x_i -> a_i, t -> sum a_i df/dx_i.
Automorphism translation_chain(const std::vector<Rational>& a, bool lifted);
/// mu_a and nu_b; lifted versions fix t (mu) or scale it by b^deg f (nu).
Automorphism mu_chain(const Rational& a, int n, bool lifted);
Automorphism nu_chain(const Rational& b, int n, bool lifted);

/// Images of x_i under the k[x] map induced by a lifted chain: pi(chain(x_i)).
Endomorphism expand_through_lift(const Automorphism& lifted_chain);

Endomorphism make_phi(int n, int l, bool lifted);

/// (sigma_1, sigma_2) with sigma_1 o sigma_2 = eps_{(1-u^(2dl)) f^l}.
/// Throws BadParameter if u = 0 or u^(2dl) = 1.
std::pair<Endomorphism, Endomorphism> make_sigma_pair(int n, int l, const Rational& u);
std::pair<Automorphism, Automorphism> sigma_pair_chains(int n, int l, const Rational& u, bool lifted);

struct ElMatrices {
  RationalMatrix a;
  RationalMatrix b;
  RationalMatrix c;
};

/// The 2x2 matrices A(a), B(a), C(a).
ElMatrices el_base_matrices(const Rational& a);
/// Their action on the degree-(n-1) binary forms in the basis x^(n-i) y^(i-1).
ElMatrices el_matrices(const Rational& a, int n);
/// Same matrices computed by expanding (x,y)M on each basis form; used as
/// an independent check of the closed-form columns.
ElMatrices el_matrices_by_expansion(const Rational& a, int n);

/// theta = phi^{i1} o tau_{a1} o ... o tau_{a_{s-1}} o phi^{i_s}.
struct WordSpec {
  std::vector<long long> powers;
  std::vector<std::vector<Rational>> translations;

  /// Throws ValidationError on empty words, zero powers, zero or
  /// wrong-length translations, or a count mismatch.
  void validate(int n) const;
  std::size_t length() const { return powers.size(); }
  std::string to_string() const;

  friend bool operator==(const WordSpec&, const WordSpec&) = default;
};

Automorphism word_chain(const WordSpec& word, int n, int l, bool lifted);
Endomorphism evaluate_word(const WordSpec& word, int n, int l, bool lifted);

/// theta(x_i) computed on k[x] alone: the innermost power's image, then
/// each translation and power substituted in turn. Independent of the
/// lifted chain except for the expanded images of phi^d.
Polynomial word_image_by_substitution(const WordSpec& word, int n, int l, int i);

/// Carries a chain on k[x] over to k[t,x] with t fixed; t then acts as a
/// free scalar parameter.
Automorphism extend_chain_fixing_t(const Automorphism& g);

}  // namespace cotame
