#include "cotame/cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "cotame/errors.hpp"
#include "cotame/parse.hpp"
#include "cotame/verify.hpp"

namespace cotame::cli {

namespace {

class ProgramParser {
 public:
  ProgramParser(std::string_view text, int n) : text_(text), n_(n) {}

  Program run() {
    Program program;
    program.atoms.push_back(atom());
    skip_space();
    while (pos_ < text_.size()) {
      expect('.', {"'.'", "end of input"});
      program.atoms.push_back(atom());
      skip_space();
    }
    return program;
  }

 private:
  [[noreturn]] void error(std::vector<std::string> expected, const std::string& detail) const {
    throw ParseError(pos_, std::move(expected), detail);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c, std::vector<std::string> expected) {
    if (!peek(c)) error(std::move(expected), std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Integer or p/q with optional sign; returns the raw slice.
  std::string number_text(bool allow_fraction) {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      error({allow_fraction ? "rational" : "integer"}, "expected a number");
    }
    if (allow_fraction && pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den) error({"positive integer"}, "expected a denominator");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    const std::size_t start = pos_;
    const std::string raw = number_text(true);
    try {
      return Rational::parse(raw);
    } catch (const Error& e) {
      pos_ = start;
      error({"rational"}, e.what());
    }
  }

  std::vector<Rational> rational_list() {
    expect('(', {"'('"});
    std::vector<Rational> values{rational()};
    while (peek(',')) {
      ++pos_;
      values.push_back(rational());
    }
    expect(')', {"','", "')'"});
    return values;
  }

  Polynomial poly_argument() {
    expect('(', {"'('"});
    const std::size_t start = pos_;
    const std::size_t close = text_.find(')', start);
    if (close == std::string_view::npos) {
      pos_ = text_.size();
      error({"')'"}, "unterminated polynomial argument");
    }
    try {
      Polynomial p = parse_poly(text_.substr(start, close - start), VarSpace::plain(n_));
      pos_ = close + 1;
      return p;
    } catch (const ParseError& e) {
      pos_ = start + e.position();
      error(e.expected(), e.what());
    }
  }

  Atom atom() {
    skip_space();
    Atom a;
    a.position = pos_;
    const std::string name = word();
    if (name == "phi") {
      a.kind = AtomKind::Phi;
      if (peek('^')) {
        ++pos_;
        a.power = std::stoll(number_text(false));
      }
    } else if (name == "tau") {
      a.kind = AtomKind::Tau;
      const std::size_t at = pos_;
      a.values = rational_list();
      if (static_cast<int>(a.values.size()) != n_) {
        pos_ = at;
        error({std::to_string(n_) + " entries"}, "translation needs " + std::to_string(n_) + " entries");
      }
    } else if (name == "eps" || name == "epsp") {
      a.kind = name == "eps" ? AtomKind::Eps : AtomKind::EpsPrime;
      a.coeff = poly_argument();
    } else if (name == "mu" || name == "nu") {
      a.kind = name == "mu" ? AtomKind::Mu : AtomKind::Nu;
      expect('(', {"'('"});
      a.values = {rational()};
      expect(')', {"')'"});
    } else if (name == "sigma") {
      a.kind = AtomKind::Sigma;
    } else if (name == "id") {
      a.kind = AtomKind::Id;
    } else {
      pos_ = a.position;
      error({"phi", "tau", "eps", "epsp", "mu", "nu", "sigma", "id"},
            name.empty() ? "expected a map" : "unknown map '" + name + "'");
    }
    return a;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

// A lifted factor for every atom: each one commutes with t -> f because
// it fixes f (eps, epsp, mu, sigma, tau through its lift) or scales it (nu).
Automorphism atom_chain(const Atom& a, int n, int l, bool lifted) {
  const VarSpace space = lifted ? VarSpace::lifted(n) : VarSpace::plain(n);
  switch (a.kind) {
    case AtomKind::Phi: return phi_chain(n, l, lifted, a.power);
    case AtomKind::Tau: return translation_chain(a.values, lifted);
    case AtomKind::Eps: return make_eps(embed(a.coeff, space));
    case AtomKind::EpsPrime: return make_eps_prime(embed(a.coeff, space));
    case AtomKind::Mu: return mu_chain(a.values[0], n, lifted);
    case AtomKind::Nu: return nu_chain(a.values[0], n, lifted);
    case AtomKind::Sigma: {
      const Endomorphism sigma = make_sigma(n);
      return Automorphism::from_endomorphism(lifted ? extend_fixing_t(sigma) : sigma);
    }
    case AtomKind::Id: return Automorphism::identity(space);
  }
  return Automorphism::identity(space);
}

bool mentions_phi(const Program& p) {
  return std::any_of(p.atoms.begin(), p.atoms.end(), [](const Atom& a) { return a.kind == AtomKind::Phi; });
}

struct Options {
  bool json = false;
  int n = 0;
  int l = 0;
  bool lifted = false;
  std::string object;
  std::string word;
  std::string apply;
  std::string a, b, u;
  std::string map;
  std::string direction;
  std::string expect;
  std::uint64_t seed = 1;
  std::string grid = "default";
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_n(const Options& o) {
  if (o.n < 3) throw UsageError("--n must be given and at least 3");
}

void require_l(const Options& o) {
  if (o.l < 1) throw UsageError("--l must be given and at least 1");
}

Rational rational_option(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return Rational::parse(text);
}

void print_images(std::ostream& out, const Endomorphism& g, bool json) {
  if (json) {
    out << endo_to_json(g).dump(2) << '\n';
    return;
  }
  for (int slot = 0; slot < g.space().slots(); ++slot) {
    out << g.space().slot_name(slot) << " -> " << format_poly(g.image(slot)) << '\n';
  }
}

void print_derivation(std::ostream& out, const Derivation& d, bool json) {
  if (json) {
    nlohmann::json images = nlohmann::json::array();
    for (const auto& img : d.images()) images.push_back(format_poly(img));
    out << nlohmann::json{{"n", d.space().n}, {"extended", d.space().extended}, {"images", images}}.dump(2) << '\n';
    return;
  }
  for (int slot = 0; slot < d.space().slots(); ++slot) {
    out << d.space().slot_name(slot) << " -> " << format_poly(d.image(slot)) << '\n';
  }
}

int print_reports(std::ostream& out, const std::vector<CheckReport>& reports, const Options& o) {
  if (o.json) {
    out << reports_to_json(reports, o.timing).dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& r : reports) {
      out << report_to_text(r) << '\n';
      passed += r.passed ? 1 : 0;
    }
    if (reports.size() != 1) out << passed << '/' << reports.size() << " checks passed\n";
  }
  const bool all = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  return all ? 0 : 1;
}

int do_construct(std::ostream& out, const Options& o) {
  require_n(o);
  if (o.object == "f") {
    const Polynomial f = make_f(o.n);
    if (o.json) {
      out << nlohmann::json{{"object", "f"}, {"n", o.n}, {"polynomial", format_poly(f)}}.dump(2) << '\n';
    } else {
      out << format_poly(f) << '\n';
    }
  } else if (o.object == "phi") {
    require_l(o);
    print_images(out, make_phi(o.n, o.l, o.lifted), o.json);
  } else if (o.object == "D") {
    print_derivation(out, make_D(o.n, o.lifted), o.json);
  } else if (o.object == "Dprime") {
    print_derivation(out, make_Dprime(o.n, o.lifted), o.json);
  } else {
    throw UsageError("construct expects one of f, phi, D, Dprime");
  }
  return 0;
}

int do_eval(std::ostream& out, const Options& o) {
  require_n(o);
  if (o.word.empty()) throw UsageError("--word is required");
  const Program program = parse_program(o.word, o.n);
  if (mentions_phi(program)) require_l(o);
  const Automorphism chain = program_chain(program, o.n, std::max(o.l, 1), true);
  if (o.apply.empty()) {
    print_images(out, o.lifted ? chain.expand() : expand_through_lift(chain), o.json);
    return 0;
  }
  const VarSpace space = o.lifted ? VarSpace::lifted(o.n) : VarSpace::plain(o.n);
  const Polynomial var = parse_poly(o.apply, space);
  if (var.size() != 1 || var.terms()[0].mono.degree() != 1 || !var.terms()[0].coeff.is_one()) {
    throw UsageError("--apply expects a single variable");
  }
  const Polynomial image = o.lifted ? chain.apply(embed(var, VarSpace::lifted(o.n)))
                                    : substitution_pi(chain.apply(embed(var, VarSpace::lifted(o.n))), make_f(o.n));
  if (o.json) {
    out << nlohmann::json{{"n", o.n}, {"extended", o.lifted}, {"variable", o.apply}, {"image", format_poly(image)}}
               .dump(2)
        << '\n';
  } else {
    out << format_poly(image) << '\n';
  }
  return 0;
}

std::vector<Rational> parse_direction(const std::string& text, int n) {
  if (text.empty()) throw UsageError("--direction is required");
  const Program p = parse_program("tau" + text, n);
  return p.atoms[0].values;
}

int do_check(std::ostream& out, const Options& o) {
  std::vector<CheckReport> reports;
  if (o.object == "theorem2") {
    require_n(o);
    reports.push_back(check_theorem2(o.n));
  } else if (o.object == "lemma1") {
    require_n(o);
    require_l(o);
    reports.push_back(check_lemma1(o.n, o.l, rational_option(o.a, "--a"), rational_option(o.b, "--b")));
  } else if (o.object == "lemma2") {
    require_n(o);
    reports.push_back(check_lemma2(o.n, rational_option(o.a, "--a")));
  } else if (o.object == "sigma") {
    require_n(o);
    require_l(o);
    reports.push_back(check_sigma(o.n, o.l, rational_option(o.u, "--u")));
  } else if (o.object == "word") {
    require_n(o);
    require_l(o);
    if (o.word.empty()) throw UsageError("--word is required");
    reports.push_back(check_word(parse_word(o.word, o.n), o.n, o.l));
  } else if (o.object == "dagger") {
    if (o.n < 1) throw UsageError("--n is required");
    if (o.map.empty()) throw UsageError("--map is required");
    Automorphism g = Automorphism::identity(VarSpace::plain(o.n));
    if (o.map == "derksen") {
      if (o.n != 3) throw UsageError("the derksen map lives in 3 variables");
      g = derksen_map();
    } else {
      const Program program = parse_program(o.map, o.n);
      if (mentions_phi(program)) require_l(o);
      g = program_chain(program, o.n, std::max(o.l, 1), false);
    }
    const auto a = parse_direction(o.direction, o.n);
    if (o.expect.empty()) {
      const bool verdict = check_el_dagger(g, a);
      CheckReport r;
      r.name = "dagger";
      r.parameters = {{"map", o.map}, {"a", format_rational_vector(a)}};
      r.passed = true;
      r.details = {{"conjugates_affine", verdict ? "true" : "false"}};
      reports.push_back(r);
    } else {
      if (o.expect != "true" && o.expect != "false") throw UsageError("--expect takes true or false");
      reports.push_back(check_el_dagger_report(o.map, g, a, o.expect == "true"));
    }
  } else {
    throw UsageError("check expects one of theorem2, lemma1, lemma2, sigma, word, dagger");
  }
  return print_reports(out, reports, o);
}

int do_suite(std::ostream& out, const Options& o) {
  return print_reports(out, run_suite(o.seed, parse_grid(o.grid)), o);
}

}  // namespace

Program parse_program(std::string_view text, int n) {
  VarSpace::plain(n).validate();
  return ProgramParser(text, n).run();
}

WordSpec parse_word(std::string_view text, int n) {
  const Program program = parse_program(text, n);
  WordSpec word;
  for (std::size_t k = 0; k < program.atoms.size(); ++k) {
    const Atom& a = program.atoms[k];
    const AtomKind wanted = k % 2 == 0 ? AtomKind::Phi : AtomKind::Tau;
    if (a.kind != wanted) {
      fail(ErrorKind::ValidationError, "word mode expects alternating phi powers and translations (offset " +
                                           std::to_string(a.position) + ")");
    }
    if (a.kind == AtomKind::Phi) {
      word.powers.push_back(a.power);
    } else {
      word.translations.push_back(a.values);
    }
  }
  if (program.atoms.size() % 2 == 0) fail(ErrorKind::ValidationError, "a word must end with a power of phi");
  word.validate(n);
  return word;
}

Automorphism program_chain(const Program& program, int n, int l, bool lifted) {
  Automorphism out = Automorphism::identity(lifted ? VarSpace::lifted(n) : VarSpace::plain(n));
  for (const auto& a : program.atoms) out = out * atom_chain(a, n, l, lifted);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of a co-tame polynomial automorphism", "cotame"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");

  auto* construct = app.add_subcommand("construct", "print f, phi, D or Dprime");
  construct->fallthrough();
  construct->add_option("object", o.object, "f | phi | D | Dprime")->required();
  construct->add_option("--n", o.n, "number of variables")->required();
  construct->add_option("--l", o.l, "exponent l of f^l");
  construct->add_flag("--lifted", o.lifted, "work in k[t,x]");

  auto* eval = app.add_subcommand("eval", "evaluate a composition program");
  eval->fallthrough();
  eval->add_option("--n", o.n, "number of variables")->required();
  eval->add_option("--l", o.l, "exponent l of f^l");
  eval->add_option("--word", o.word, "program, e.g. \"phi . tau(1,0,0) . phi^-1\"")->required();
  eval->add_option("--apply", o.apply, "only print the image of this variable");
  eval->add_flag("--lifted", o.lifted, "print images on k[t,x]");

  auto* check = app.add_subcommand("check", "run one verification");
  check->fallthrough();
  check->add_option("what", o.object, "theorem2 | lemma1 | lemma2 | sigma | word | dagger")->required();
  check->add_option("--n", o.n, "number of variables");
  check->add_option("--l", o.l, "exponent l of f^l");
  check->add_option("--a", o.a, "rational a");
  check->add_option("--b", o.b, "rational b");
  check->add_option("--u", o.u, "rational u");
  check->add_option("--word", o.word, "word phi^i1 . tau(a1) . ...");
  check->add_option("--map", o.map, "program for the dagger check, or derksen");
  check->add_option("--direction", o.direction, "direction a, e.g. (1,0,0)");
  check->add_option("--expect", o.expect, "expected dagger verdict: true or false");

  auto* suite = app.add_subcommand("suite", "run the verification suite");
  suite->fallthrough();
  suite->add_option("--seed", o.seed, "seed for the randomized grids");
  suite->add_option("--grid", o.grid, "empty | quick | default");
  suite->add_flag("--timing", o.timing, "include elapsed seconds in JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return do_construct(out, o);
    if (eval->parsed()) return do_eval(out, o);
    if (check->parsed()) return do_check(out, o);
    return do_suite(out, o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cotame::cli
