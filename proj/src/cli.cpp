#include "wittpolar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wittpolar/etale.hpp"
#include "wittpolar/fgl.hpp"
#include "wittpolar/verify.hpp"
#include "wittpolar/wittuniv.hpp"

namespace wittpolar::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return Json::parse(text);
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidInput("cannot write " + out_path);
  f << text;
}

void diagnose(std::ostream& err, const std::string& kind, const std::string& message) {
  err << with_format(Json{{"error", {{"kind", kind}, {"message", message}}}}).dump() << "\n";
}

Json fgl_report(unsigned p, std::size_t D, const std::vector<std::string>& coeffs, std::size_t assoc_degree) {
  PTypicalLog lg = [&] {
    if (coeffs.empty()) return typicalize_log(log_one_plus(D), p);
    std::vector<Rational> l;
    for (const auto& c : coeffs) l.push_back(rational_from_json(Json(c)));
    return make_log(p, D, l);
  }();
  TruncSeries ex = exp_from_log(lg);
  SupportReport sup = support_check(ex, p);
  BivariateLaw law = group_law(lg, D);
  auto bad = non_integral_terms(law);

  Json log = Json::array(), exp = Json::array(), terms = Json::array(), nonint = Json::array();
  for (const auto& c : lg.l) log.push_back(rational_to_json(c));
  for (const auto& c : ex.coeffs()) exp.push_back(rational_to_json(c));
  for (const auto& [ab, c] : law.terms) terms.push_back({{"a", ab.first}, {"b", ab.second}, {"c", rational_to_json(c)}});
  for (const auto& [a, b] : bad) nonint.push_back({a, b});
  const std::size_t k = std::min(assoc_degree, D);
  return with_format(Json{
      {"p", p},
      {"precision", D},
      {"log", log},
      {"log_source", coeffs.empty() ? "typical part of log(1+x)" : "given"},
      {"exp", exp},
      {"exp_support", {{"ok", sup.ok}, {"offenders", sup.offenders}}},
      {"law",
       {{"unit", law.unit_ok},
        {"symmetric", law.symmetric},
        {"polar_degrees", law.polar_degrees},
        {"associative", associativity_check(group_law(lg, k), k)},
        {"associativity_degree", k},
        {"p_integral", bad.empty()},
        {"non_integral_terms", nonint},
        {"terms", terms}}}});
}

Json split_report(const PPolarAlgebra& A) {
  Decomposition D = decompose(A);
  Json j = decomposition_to_json(D);
  GeometricPoints G = geometric_points(A);
  Json orbits = Json::array();
  for (const auto& o : G.orbits) {
    Json cyc = Json::array();
    for (auto i : o) cyc.push_back(i + 1);
    orbits.push_back(cyc);
  }
  j["geometric_points"] = {{"count", G.count}, {"orbits", orbits}};
  j["nilradical_dim"] = A.dim() - D.reduced_dim;
  return with_format(j);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt vectors, co-Witt vectors and formal groups over p-polar algebras"};
  app.require_subcommand(1);
  std::string cache;
  app.add_option("--cache", cache, "cache directory (default $WITTPOLAR_CACHE or .wittpolar-cache)");

  unsigned p = 0;
  std::size_t n = 0, precision = 0, assoc_degree = 10;
  std::string kind, input, out_path;
  std::vector<std::string> log_coeffs, suites;
  std::uint64_t seed = kDefaultSeed;
  bool as_json = false;

  auto* wp = app.add_subcommand("witt-poly", "universal Witt polynomials as JSON");
  wp->add_option("--p", p, "prime")->required();
  wp->add_option("--n", n, "length")->required();
  wp->add_option("--kind", kind, "sum, neg, prod, frob or scalar")->required();
  wp->add_option("--out", out_path, "output file");

  auto* we = app.add_subcommand("witt-eval", "evaluate a Witt vector expression");
  we->add_option("input", input, "expression document, - for stdin")->required();
  we->add_option("--out", out_path, "output file");

  auto* cw = app.add_subcommand("cw", "co-Witt vector operations");
  cw->add_option("input", input, "co-Witt document, - for stdin")->required();
  cw->add_option("--out", out_path, "output file");

  auto* sp = app.add_subcommand("split", "decompose the reduced quotient into factors");
  sp->add_option("input", input, "algebra, - for stdin")->required();
  sp->add_option("--p", p, "prime, when the input is a commutative algebra");
  sp->add_option("--out", out_path, "output file");

  auto* fg = app.add_subcommand("fgl", "p-typical formal group law checks");
  fg->add_option("--p", p, "prime")->required();
  fg->add_option("--precision", precision, "truncation degree D")->required();
  fg->add_option("--log-coeffs", log_coeffs, "l_0, l_1, ... as rationals, l_0 = 1")->delimiter(',');
  fg->add_option("--assoc-degree", assoc_degree, "degree of the associativity check (default 10)");
  fg->add_option("--out", out_path, "output file");

  auto* po = app.add_subcommand("polarize", "polarize a commutative algebra");
  po->add_option("input", input, "commutative algebra, - for stdin")->required();
  po->add_option("--p", p, "prime (overrides the input)");
  po->add_option("--out", out_path, "output file");

  auto* ve = app.add_subcommand("verify", "run the property suites");
  ve->add_option("--suite", suites, "suite name (repeatable); default all");
  ve->add_option("--p", p, "restrict to one prime");
  ve->add_option("--seed", seed, "seed for randomized suites");
  ve->add_flag("--json", as_json, "print JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    diagnose(err, "Usage", e.what());
    return 1;
  }

  try {
    if (!cache.empty()) {
      set_cache_directory(std::filesystem::path(cache));
    } else if (!std::getenv("WITTPOLAR_CACHE")) {
      set_cache_directory(std::filesystem::path(".wittpolar-cache"));
    }

    auto with_p = [&](Json j) {
      if (p != 0) j["p"] = p;
      return j;
    };

    if (wp->parsed()) {
      auto k = parse_kind(kind);
      if (!k) throw InvalidInput("unknown kind \"" + kind + "\"");
      emit(with_format(family_to_json(*universal_polys(p, n, *k))), out_path, out);
    } else if (we->parsed()) {
      emit(eval_witt_document(read_json(input)), out_path, out);
    } else if (cw->parsed()) {
      emit(eval_cw_document(read_json(input)), out_path, out);
    } else if (sp->parsed()) {
      emit(split_report(any_algebra_from_json(with_p(read_json(input)))), out_path, out);
    } else if (fg->parsed()) {
      emit(fgl_report(p, precision, log_coeffs, assoc_degree), out_path, out);
    } else if (po->parsed()) {
      Json j = with_p(read_json(input));
      if (!j.contains("p")) throw InvalidInput("no prime: pass --p or put \"p\" in the input");
      const unsigned pp = static_cast<unsigned>(json_uint(j, "p"));
      emit(with_format(algebra_to_json(polarize(commutative_from_json(j), pp))), out_path, out);
    } else if (ve->parsed()) {
      VerifyOptions opts;
      opts.seed = seed;
      if (p != 0) opts.p = p;
      std::vector<CheckResult> results;
      if (suites.empty()) {
        results = run_all(opts);
      } else {
        for (const auto& s : suites) {
          auto part = run_suite(s, opts);
          results.insert(results.end(), part.begin(), part.end());
        }
      }
      if (as_json) {
        out << results_to_json(results, opts).dump(2) << "\n";
      } else {
        std::size_t passed = 0;
        for (const auto& r : results) passed += r.passed ? 1 : 0;
        out << results_to_table(results) << passed << "/" << results.size() << " checks passed\n";
      }
      return all_passed(results) ? 0 : 3;
    }
    return 0;
  } catch (const InternalInvariant& e) {
    diagnose(err, e.kind(), e.what());
    return 2;
  } catch (const Error& e) {
    diagnose(err, e.kind(), e.what());
    return 1;
  } catch (const Json::exception& e) {
    diagnose(err, "InvalidJson", e.what());
    return 1;
  } catch (const std::exception& e) {
    diagnose(err, "Internal", e.what());
    return 2;
  }
}

}  // namespace wittpolar::cli
