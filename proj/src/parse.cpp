#include "cotame/parse.hpp"

#include <cctype>

#include "cotame/errors.hpp"

namespace cotame {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, VarSpace space) : text_(text), space_(space) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, {"'+'", "'-'", "end of input"}, "unexpected character");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(space_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string digits(const char* what) {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(pos_, {what}, "expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term(bool negative) {
    skip();
    Term out{Monomial{}, Rational(1)};
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits("integer"));
      mpz_class den(1);
      skip();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = mpz_class(digits("positive integer"));
        if (den == 0) throw ParseError(at, {"positive integer"}, "zero denominator");
      }
      out.coeff = Rational(mpq_class(num, den));
      skip();
      if (peek() == '*') {
        ++pos_;
        factor(out.mono);
      } else {
        if (negative) out.coeff = -out.coeff;
        return out;
      }
    } else {
      factor(out.mono);
    }
    while (true) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      factor(out.mono);
    }
    if (negative) out.coeff = -out.coeff;
    return out;
  }

  void factor(Monomial& mono) {
    skip();
    const std::size_t at = pos_;
    int slot = -1;
    if (peek() == 't') {
      ++pos_;
      if (!space_.extended) throw ParseError(at, expected_vars(), "t is not a variable of this ring");
      slot = 0;
    } else if (peek() == 'x') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError(pos_, {"variable index"}, "expected a variable index");
      }
      const std::string idx = digits("variable index");
      const long index = idx.size() > 4 ? 0 : std::stol(idx);
      if (index < 1 || index > space_.n) throw ParseError(at, expected_vars(), "unknown variable x" + idx);
      slot = space_.x_slot(static_cast<int>(index));
    } else {
      throw ParseError(at, expected_vars(), "expected a variable");
    }
    skip();
    std::uint32_t e = 1;
    if (peek() == '^') {
      ++pos_;
      const std::size_t exp_at = pos_;
      const std::string digits_text = digits("natural exponent");
      if (digits_text.size() > 5 || std::stoul(digits_text) > kMaxExponent) {
        throw ParseError(exp_at, {"exponent <= 32767"}, "exponent too large");
      }
      e = static_cast<std::uint32_t>(std::stoul(digits_text));
    }
    const std::uint32_t total = mono[slot] + e;
    if (total > kMaxExponent) throw ParseError(at, {}, "exponent too large");
    mono.set(slot, total);
  }

  std::vector<std::string> expected_vars() const {
    std::vector<std::string> out;
    if (space_.extended) out.push_back("t");
    out.push_back("x1..x" + std::to_string(space_.n));
    return out;
  }

  std::string_view text_;
  VarSpace space_;
  std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m, const VarSpace& space) {
  std::string out;
  for (int slot = 0; slot < space.slots(); ++slot) {
    const std::uint32_t e = m[slot];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += space.slot_name(slot);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

Polynomial parse_poly(std::string_view text, VarSpace space) {
  space.validate();
  return PolyParser(text, space).run();
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : p.terms()) {
    const bool negative = term.coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? -term.coeff : term.coeff;
    const std::string mono = format_monomial(term.mono, p.space());
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.to_string() + "*" + mono;
    }
  }
  return out;
}

std::string format_rational_vector(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace cotame
