#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cotame/constructions.hpp"

namespace cotame::cli {

// Composition programs, '.' meaning o with (g o h)(x) = g(h(x)):
//   program := atom ('.' atom)*
//   atom    := 'phi' ('^' int)? | 'tau' '(' rat (',' rat)* ')'
//            | 'eps' '(' poly ')' | 'epsp' '(' poly ')'
//            | 'mu' '(' rat ')' | 'nu' '(' rat ')' | 'sigma' | 'id'

enum class AtomKind { Phi, Tau, Eps, EpsPrime, Mu, Nu, Sigma, Id };

struct Atom {
  AtomKind kind = AtomKind::Id;
  long long power = 1;          // phi
  std::vector<Rational> values; // tau entries, or the single mu/nu scalar
  Polynomial coeff;             // eps / epsp
  std::size_t position = 0;     // offset of the atom in the source text
};

struct Program {
  std::vector<Atom> atoms;  // leftmost first, i.e. applied last
};

/// Throws ParseError (with offset) on malformed text, and for tau vectors
/// of the wrong length or polynomials outside k[x1..xn].
Program parse_program(std::string_view text, int n);

/// Strict word mode: phi^i1 . tau(a1) . phi^i2 ... with every i_j != 0 and
/// every a_j != 0. Throws ParseError on syntax and ValidationError when the
/// program is not such a word.
WordSpec parse_word(std::string_view text, int n);

/// The program as a chain of invertible factors on k[x] or k[t,x]. eps and
/// epsp coefficients are checked against ker D / ker D' here (NotInKernel).
/// `l` is only consulted when the program mentions phi.
Automorphism program_chain(const Program& program, int n, int l, bool lifted);

/// Runs one command line (without the program name). Exit status: 0 when
/// every requested check passed, 1 when a check failed, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cotame::cli
