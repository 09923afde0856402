#include "cotame/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cotame/errors.hpp"
#include "cotame/parse.hpp"

namespace cotame {

namespace {

using Clock = std::chrono::steady_clock;

std::string endo_text(const Endomorphism& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.images().size(); ++i) {
    out += (i ? ", " : "") + format_poly(g.images()[i]);
  }
  return out + ")";
}

// Runs `body` with timing; `body` fills passed/witness/details.
CheckReport timed(std::string name, std::vector<std::pair<std::string, std::string>> params,
                  const std::function<void(CheckReport&)>& body) {
  CheckReport report;
  report.name = std::move(name);
  report.parameters = std::move(params);
  const auto start = Clock::now();
  body(report);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

// Records an endomorphism identity; on mismatch the witness holds both sides.
bool expect_equal(CheckReport& report, const std::string& label, const Endomorphism& lhs, const Endomorphism& rhs) {
  if (lhs == rhs) return true;
  std::string text = label + ": lhs = " + endo_text(lhs) + " ; rhs = " + endo_text(rhs);
  report.witness = report.witness ? *report.witness + " | " + text : text;
  return false;
}

Endomorphism eps_endo(int n, const Polynomial& coeff) { return exp_endo(make_D(n), coeff); }
Endomorphism eps_prime_endo(int n, const Rational& c) {
  return exp_endo(make_Dprime(n), Polynomial::constant(VarSpace::plain(n), c));
}

std::string vector_text(const std::vector<Rational>& v) { return format_rational_vector(v); }

}  // namespace

nlohmann::json report_to_json(const CheckReport& report, bool include_timing) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  nlohmann::json details = nlohmann::json::object();
  for (const auto& [k, v] : report.details) details[k] = v;
  nlohmann::json out{{"name", report.name}, {"parameters", params}, {"passed", report.passed}, {"details", details}};
  out["witness"] = report.witness ? nlohmann::json(*report.witness) : nlohmann::json(nullptr);
  if (include_timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports, bool include_timing) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r, include_timing));
  return out;
}

std::string report_to_text(const CheckReport& report) {
  std::ostringstream out;
  out << (report.passed ? "PASS " : "FAIL ") << report.name;
  for (const auto& [k, v] : report.parameters) out << ' ' << k << '=' << v;
  for (const auto& [k, v] : report.details) out << "\n  " << k << ": " << v;
  if (report.witness) out << "\n  witness: " << *report.witness;
  return out.str();
}

CheckReport check_theorem2(int n) {
  if (n < 3) fail(ErrorKind::BadDimension, "the kernel check needs n >= 3");
  return timed("theorem2", {{"n", std::to_string(n)}}, [&](CheckReport& r) {
    const Polynomial f = make_f(n);
    const Polynomial df = apply(make_D(n), f);
    const Polynomial dpf = apply(make_Dprime(n), f);
    r.passed = df.is_zero() && dpf.is_zero();
    r.details.push_back({"f", format_poly(f)});
    if (!r.passed) r.witness = "D(f) = " + format_poly(df) + " ; D'(f) = " + format_poly(dpf) + " ; expected 0";
  });
}

CheckReport check_lemma1(int n, int l, const Rational& a, const Rational& b) {
  if (a.is_zero()) fail(ErrorKind::BadParameter, "a must be nonzero");
  if (l < 1) fail(ErrorKind::BadParameter, "l must be at least 1");
  return timed("lemma1",
               {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"a", a.to_string()}, {"b", b.to_string()}},
               [&](CheckReport& r) {
                 const Polynomial fl = pow(make_f(n), static_cast<std::uint32_t>(l));
                 const int d = f_degree(n);
                 const Endomorphism mu = make_mu(a, n);
                 const Endomorphism nu = make_nu(a, n);
                 const Endomorphism eps_b = eps_endo(n, fl * b);
                 const Endomorphism epsp_b = eps_prime_endo(n, b);
                 bool ok = true;
                 ok &= expect_equal(r, "(i)", compose(mu, eps_b), compose(eps_endo(n, fl * (a.pow(-2) * b)), mu));
                 ok &= expect_equal(r, "(ii)", compose(nu, eps_b),
                                    compose(eps_endo(n, fl * (a.pow(static_cast<long long>(d) * l) * b)), nu));
                 ok &= expect_equal(r, "(iii)", compose(mu, epsp_b), compose(eps_prime_endo(n, a.pow(2) * b), mu));
                 ok &= expect_equal(r, "(iv)", compose(nu, epsp_b), compose(epsp_b, nu));
                 r.passed = ok;
               });
}

CheckReport check_lemma2(int n, const Rational& a) {
  if (a.is_zero()) fail(ErrorKind::BadParameter, "a must be nonzero");
  return timed("lemma2", {{"n", std::to_string(n)}, {"a", a.to_string()}}, [&](CheckReport& r) {
    const VarSpace space = VarSpace::plain(n);
    const auto c = [&](const Rational& v) { return Polynomial::constant(space, v); };
    const Endomorphism lhs = compose(compose(eps_endo(n, c(Rational(1) - a)), eps_prime_endo(n, Rational(-1))),
                                     compose(eps_endo(n, c(Rational(1) - a.inverse())), eps_prime_endo(n, a)));
    const Endomorphism rhs = make_mu(a.inverse(), n);
    r.passed = expect_equal(r, "lemma2", lhs, rhs);
    r.details.push_back({"rhs", endo_text(rhs)});
  });
}

CheckReport check_sigma(int n, int l, const Rational& u) {
  return timed("sigma", {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"u", u.to_string()}},
               [&](CheckReport& r) {
                 const auto [s1, s2] = make_sigma_pair(n, l, u);
                 const long long dl = static_cast<long long>(f_degree(n)) * l;
                 const Rational coeff = Rational(1) - u.pow(2 * dl);
                 const Polynomial fl = pow(make_f(n), static_cast<std::uint32_t>(l));
                 const Endomorphism rhs = eps_endo(n, fl * coeff);
                 r.passed = expect_equal(r, "sigma1 o sigma2 vs eps", compose(s1, s2), rhs);
                 r.details.push_back({"coefficient", coeff.to_string()});
                 r.details.push_back({"eps", "eps_{" + coeff.to_string() + "*f^" + std::to_string(l) + "}"});
               });
}

CheckReport check_phi_classes(int n, int l, long long d) {
  if (d == 0) fail(ErrorKind::BadParameter, "phi power must be nonzero");
  return timed("phi_classes", {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"d", std::to_string(d)}},
               [&](CheckReport& r) {
                 const VarSpace lifted = VarSpace::lifted(n);
                 const Automorphism phi = phi_chain(n, l, true, d);
                 const Automorphism eps = make_eps(-pow(Polynomial::t(lifted), static_cast<std::uint32_t>(l)));
                 bool ok = true;
                 for (int i = 1; i <= n; ++i) {
                   const Polynomial x = Polynomial::x(lifted, i);
                   const DegreeClassTag p_tag{ClassKind::P, static_cast<long long>(2 * n - i - 1) * l, 1};
                   const DegreeClassTag r_tag{ClassKind::R, static_cast<long long>(n - i) * l, 1};
                   const Polynomial img = phi.apply(x);
                   const Polynomial eimg = eps.apply(x);
                   if (!in_class(img, p_tag)) {
                     ok = false;
                     r.witness = r.witness.value_or("") + "phi~^d(x" + std::to_string(i) + ") = " + format_poly(img) +
                                 " not in " + p_tag.to_string() + " ";
                   }
                   if (!in_class(eimg, r_tag)) {
                     ok = false;
                     r.witness = r.witness.value_or("") + "eps~(x" + std::to_string(i) + ") = " + format_poly(eimg) +
                                 " not in " + r_tag.to_string() + " ";
                   }
                 }
                 r.passed = ok;
               });
}

CheckReport check_word(const WordSpec& word, int n, int l) {
  word.validate(n);
  return timed("word", {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"word", word.to_string()}},
               [&](CheckReport& r) {
                 const WordPrediction predicted = word_class_predict(word, n, l);
                 const Polynomial lifted_image = word_chain(word, n, l, true).apply(Polynomial::x(VarSpace::lifted(n), 1));
                 const bool in_predicted_class = in_class(lifted_image, predicted.tag);
                 const Polynomial image = word_image_by_substitution(word, n, l, 1);
                 const long long degree = total_degree(image);
                 const Polynomial projected = substitution_pi(lifted_image, make_f(n));
                 const bool pi_matches = projected == image;
                 // An image of degree >= 2 already rules out an affine map.
                 const bool non_affine = degree > 1;
                 r.passed = in_predicted_class && pi_matches && non_affine && degree == predicted.degree;
                 r.details.push_back({"class", predicted.tag.to_string()});
                 r.details.push_back({"predicted_degree", std::to_string(predicted.degree)});
                 r.details.push_back({"degree", std::to_string(degree)});
                 r.details.push_back({"in_class", in_predicted_class ? "true" : "false"});
                 r.details.push_back({"pi_matches", pi_matches ? "true" : "false"});
                 r.details.push_back({"non_affine", non_affine ? "true" : "false"});
                 if (!r.passed) {
                   r.witness = "predicted " + predicted.tag.to_string() + " degree " + std::to_string(predicted.degree) +
                               " ; measured degree " + std::to_string(degree) +
                               (pi_matches ? std::string() : " ; pi(theta~(x1)) = " + format_poly(projected) +
                                                                 " vs theta(x1) = " + format_poly(image));
                 }
               });
}

Automorphism derksen_map() {
  const VarSpace space = VarSpace::plain(3);
  const Polynomial x1 = Polynomial::x(space, 1);
  return Automorphism::from_endomorphism(
      Endomorphism(space, {x1, Polynomial::x(space, 2), Polynomial::x(space, 3) + x1 * x1}));
}

bool check_el_dagger(const Automorphism& g, const std::vector<Rational>& a) {
  const VarSpace space = g.space();
  if (space.extended) fail(ErrorKind::SpaceMismatch, "condition check works on k[x1..xn]");
  if (static_cast<int>(a.size()) != space.n) fail(ErrorKind::ArityMismatch, "direction length must equal n");
  bool nonzero = false;
  for (const auto& v : a) nonzero = nonzero || !v.is_zero();
  if (!nonzero) fail(ErrorKind::ZeroVector, "direction must be nonzero");
  if (as_affine(g.expand())) fail(ErrorKind::AffineInput, "condition is posed for non-affine maps");

  // The t slot of k[t,x] plays the free scalar c of b = c a.
  const Automorphism lifted = extend_chain_fixing_t(g);
  const Automorphism lifted_inverse = lifted.inverse();
  const VarSpace ext = lifted.space();
  std::vector<Polynomial> shift{Polynomial::t(ext)};
  for (int i = 1; i <= space.n; ++i) {
    shift.push_back(Polynomial::x(ext, i) + Polynomial::t(ext) * a[static_cast<std::size_t>(i - 1)]);
  }
  WeightVector w{std::vector<std::uint32_t>(static_cast<std::size_t>(ext.slots()), 1)};
  w.entries[0] = 0;
  for (int i = 1; i <= space.n; ++i) {
    const Polynomial image = lifted.apply(substitute(lifted_inverse.apply(Polynomial::x(ext, i)), shift));
    if (!image.is_zero() && weighted_degree(image, w) > 1) return false;
  }
  return true;
}

CheckReport check_el_dagger_report(const std::string& label, const Automorphism& g, const std::vector<Rational>& a,
                                   bool expected) {
  return timed("dagger", {{"map", label}, {"a", vector_text(a)}}, [&](CheckReport& r) {
    const bool verdict = check_el_dagger(g, a);
    r.passed = verdict == expected;
    r.details.push_back({"conjugates_affine", verdict ? "true" : "false"});
    if (!r.passed) {
      r.witness = std::string("expected conjugates_affine = ") + (expected ? "true" : "false") + " ; computed " +
                  (verdict ? "true" : "false");
    }
  });
}

std::vector<Rational> seeded_rationals(std::uint64_t seed, std::size_t count, bool allow_zero) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> out;
  while (out.size() < count) {
    const int p = num(rng);
    const int q = den(rng);
    if (p == 0 && !allow_zero) continue;
    out.emplace_back(p, q);
  }
  return out;
}

std::vector<std::vector<Rational>> seeded_directions(std::uint64_t seed, std::size_t count, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<std::vector<Rational>> out;
  while (out.size() < count) {
    std::vector<Rational> a;
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      const int v = entry(rng);
      nonzero = nonzero || v != 0;
      a.emplace_back(v);
    }
    if (nonzero) out.push_back(std::move(a));
  }
  return out;
}

std::vector<CorpusWord> word_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<CorpusWord> out;
  std::set<std::pair<int, std::string>> seen;
  auto add = [&](WordSpec w, int n) {
    if (out.size() >= count) return;
    if (seen.insert({n, w.to_string()}).second) out.push_back(CorpusWord{std::move(w), n, 1});
  };
  const long long powers[] = {1, -1, 2, -2};
  for (int n : {4, 3}) {
    for (long long p : powers) add(WordSpec{{p}, {}}, n);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> power_pick(0, 3);
  auto random_word = [&](std::size_t s) {
    WordSpec w;
    for (std::size_t j = 0; j < s; ++j) {
      w.powers.push_back(powers[power_pick(rng)]);
      if (j > 0) w.translations.push_back(seeded_directions(rng(), 1, 3).front());
    }
    return w;
  };
  const std::size_t deep = count >= 50 ? 2 : 0;
  for (std::size_t k = 0; k < deep; ++k) add(random_word(3), 3);
  while (out.size() < count) add(random_word(2), 3);
  return out;
}

GridPreset parse_grid(const std::string& name) {
  if (name == "empty") return GridPreset::Empty;
  if (name == "quick") return GridPreset::Quick;
  if (name == "default") return GridPreset::Default;
  fail(ErrorKind::BadParameter, "unknown grid preset '" + name + "' (expected empty, quick or default)");
}

std::vector<CheckReport> run_suite(std::uint64_t seed, GridPreset grid) {
  std::vector<std::function<CheckReport()>> tasks;
  if (grid == GridPreset::Empty) return {};
  const bool full = grid == GridPreset::Default;

  for (int n = 3; n <= (full ? 8 : 5); ++n) tasks.push_back([n] { return check_theorem2(n); });

  const std::size_t pairs = full ? 20 : 2;
  const auto as = seeded_rationals(seed, pairs, false);
  const auto bs = seeded_rationals(seed ^ 0x9e3779b97f4a7c15ULL, pairs, true);
  for (int n : full ? std::vector<int>{3, 4, 5} : std::vector<int>{3}) {
    for (int l : full ? std::vector<int>{1, 2} : std::vector<int>{1}) {
      for (std::size_t k = 0; k < pairs; ++k) {
        tasks.push_back([=] { return check_lemma1(n, l, as[k], bs[k]); });
      }
    }
  }

  const std::vector<Rational> lemma2_as{Rational(2), Rational(-1), Rational(1, 2), Rational(3, 5)};
  for (int n = 3; n <= (full ? 6 : 3); ++n) {
    for (const auto& a : lemma2_as) tasks.push_back([=] { return check_lemma2(n, a); });
  }

  using SigmaCase = std::tuple<int, int, long long>;
  const std::vector<SigmaCase> sigma_cases =
      full ? std::vector<SigmaCase>{{3, 1, 2}, {3, 2, 2}, {4, 1, 2}, {5, 1, 3}} : std::vector<SigmaCase>{{3, 1, 2}};
  for (const auto& [n, l, u] : sigma_cases) tasks.push_back([=] { return check_sigma(n, l, Rational(u)); });

  for (int n = 3; n <= (full ? 5 : 3); ++n) {
    for (long long d : full ? std::vector<long long>{-2, -1, 1, 2} : std::vector<long long>{1}) {
      tasks.push_back([=] { return check_phi_classes(n, 1, d); });
    }
  }

  const auto corpus = word_corpus(seed, full ? 50 : 10);
  for (const auto& w : corpus) tasks.push_back([w] { return check_word(w.word, w.n, w.l); });

  tasks.push_back([] { return check_el_dagger_report("derksen", derksen_map(), {0, 0, 1}, true); });
  for (const auto& a : seeded_directions(seed, full ? 10 : 2, 3)) {
    tasks.push_back([a] { return check_el_dagger_report("phi(n=3,l=1)", phi_chain(3, 1, false), a, false); });
  }

  std::vector<CheckReport> reports(tasks.size());
  const auto total = static_cast<long long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < total; ++k) {
    try {
      reports[static_cast<std::size_t>(k)] = tasks[static_cast<std::size_t>(k)]();
    } catch (const Error& e) {
      CheckReport& r = reports[static_cast<std::size_t>(k)];
      r.name = "error";
      r.passed = false;
      r.witness = std::string(e.what());
    }
  }
  return reports;
}

}  // namespace cotame
