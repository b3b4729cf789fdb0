#include "cutpaste/cli.hpp"

#include "cutpaste/cobordism.hpp"
#include "cutpaste/error.hpp"
#include "cutpaste/intersection_form.hpp"
#include "cutpaste/scalar.hpp"
#include "cutpaste/selftest.hpp"
#include "cutpaste/simplicial.hpp"
#include "cutpaste/skk.hpp"
#include "cutpaste/surfaces.hpp"
#include "cutpaste/tqft.hpp"
#include "cutpaste/virtual_bordism.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace cutpaste::cli {

namespace {

using nlohmann::json;

struct Report {
  int code = 0;
  std::ostringstream text;
  json doc = json::object();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}


json class_json(const skk::SKKClass& c) {
  json j{{"dim", c.dim}};
  if (const auto* m = std::get_if<skk::SKKClass::Mod2>(&c.value)) {
    j["semicharacteristic_mod2"] = m->odd ? 1 : 0;
  } else if (const auto* z = std::get_if<Integer>(&c.value)) {
    j["chi_half"] = z->str();
  } else {
    const auto& cs = std::get<skk::SKKClass::ChiSigma>(c.value);
    j["chi"] = cs.chi.str();
    j["sigma"] = cs.sigma.str();
  }
  return j;
}

// Scalars for the cap and cup: either both rational or both exponents.
struct ScalarOptions {
  std::string cap, cup, cap_exp, cup_exp;

  void attach(CLI::App* app) {
    app->add_option("--cap", cap, "cap scalar a (rational)");
    app->add_option("--cup", cup, "cup scalar e (rational)");
    app->add_option("--cap-exp", cap_exp, "cap scalar a = exp(r)");
    app->add_option("--cup-exp", cup_exp, "cup scalar e = exp(r)");
  }
  bool given() const { return !cap.empty() || !cup.empty() || !cap_exp.empty() || !cup_exp.empty(); }
  tqft::InvertibleTQFT2 theory() const {
    const bool rational = !cap.empty() || !cup.empty();
    const bool exponential = !cap_exp.empty() || !cup_exp.empty();
    if (rational && exponential) throw Error(ErrorKind::VariantMismatch, "cannot mix --cap/--cup with --cap-exp/--cup-exp");
    if (rational) {
      if (cap.empty() || cup.empty()) throw Error(ErrorKind::InvalidSpec, "both --cap and --cup are required");
      return tqft::make_tqft(GroupScalar::rational(parse_rational(cap)), GroupScalar::rational(parse_rational(cup)));
    }
    if (cap_exp.empty() || cup_exp.empty()) throw Error(ErrorKind::InvalidSpec, "both --cap-exp and --cup-exp are required");
    return tqft::make_tqft(GroupScalar::exp(parse_rational(cap_exp)), GroupScalar::exp(parse_rational(cup_exp)));
  }
};

json law_report_json(const tqft::LawReport& r) {
  json j{{"checks", r.checks}, {"violations", json::array()}};
  for (const auto& v : r.violations) j["violations"].push_back({{"law", v.law}, {"witness", v.witness}});
  return j;
}

void print_law_report(Report& rep, const tqft::LawReport& r) {
  for (const auto& [law, n] : r.checks) {
    const auto bad = std::count_if(r.violations.begin(), r.violations.end(), [&](const auto& v) { return v.law == law; });
    rep.text << (bad ? "FAIL " : "ok   ") << law << " (" << n << " instances)\n";
  }
  for (const auto& v : r.violations) rep.text << "  witness [" << v.law << "]: " << v.witness << "\n";
}

void cmd_homology(Report& rep, const std::string& path, const std::string& coefficients) {
  simplicial::Coefficients c = simplicial::Coefficients::Integers;
  if (coefficients == "rationals") c = simplicial::Coefficients::Rationals;
  else if (coefficients == "mod2") c = simplicial::Coefficients::Mod2;
  else if (coefficients != "integers") throw Error(ErrorKind::InvalidSpec, "unknown coefficients '" + coefficients + "'");
  const auto k = simplicial::load_complex(path);
  const auto h = simplicial::homology(k, c);
  rep.text << "betti = (" << join(h.betti) << ")\n";
  json torsion = json::array();
  for (std::size_t d = 0; d < h.torsion.size(); ++d) {
    json degree = json::array();
    for (const auto& t : h.torsion[d]) {
      degree.push_back(t.str());
      rep.text << "torsion H_" << d << ": Z/" << t << "\n";
    }
    torsion.push_back(degree);
  }
  rep.doc = {{"betti", h.betti}, {"torsion", torsion}, {"coefficients", coefficients}};
}

void cmd_invariants(Report& rep, const std::string& path) {
  const auto k = simplicial::load_complex(path);
  const Integer chi = simplicial::euler_characteristic(k);
  rep.text << "dim = " << k.dim() << "\nchi = " << chi << "\n";
  rep.doc = {{"dim", k.dim()}, {"chi", chi.str()}};
  if (k.dim() % 2 == 1 || chi % 2 == 0) {
    const auto half = simplicial::kervaire_semicharacteristic(k);
    rep.text << "chi_half = " << half.value << (half.mod2 ? " (mod 2)" : "") << "\n";
    rep.doc["chi_half"] = half.value.str();
    rep.doc["chi_half_mod2"] = half.mod2;
  } else {
    // Odd chi in even dimension: chi/2 is only a rational number.
    const std::string half = to_string(Rational(chi, 2));
    rep.text << "chi_half = " << half << "\n";
    rep.doc["chi_half"] = half;
    rep.doc["chi_half_mod2"] = false;
  }
  if (k.dim() == 4) {
    const long sigma = intersection_form::signature(k);
    rep.text << "sigma = " << sigma << "\n";
    rep.doc["sigma"] = sigma;
  }
}

void cmd_cutpaste(Report& rep, const std::string& path, const std::string& start_text) {
  const auto moves = surfaces::parse_script(read_file(path));
  const surfaces::Surface start = surfaces::parse_surface(start_text);
  const long chi0 = surfaces::chi(start);
  surfaces::Surface current = start;
  rep.text << "start: " << surfaces::to_string(start) << " (chi = " << chi0 << ")\n";
  json steps = json::array();
  for (std::size_t i = 0; i < moves.size(); ++i) {
    current = surfaces::apply(current, moves[i]);
    const long c = surfaces::chi(current);
    rep.text << "step " << i + 1 << ": " << surfaces::to_string(moves[i]) << " -> " << surfaces::to_string(current)
             << " (chi = " << c << ")\n";
    steps.push_back({{"move", surfaces::to_string(moves[i])}, {"surface", surfaces::to_string(current)}, {"chi", c}});
    if (c != chi0) {
      rep.code = 1;
      rep.text << "witness: chi changed from " << chi0 << " to " << c << " at step " << i + 1 << "\n";
    }
  }
  rep.doc = {{"start", surfaces::to_string(start)}, {"steps", steps}, {"final", surfaces::to_string(current)}};
  if (start.is_closed() && current.is_closed()) {
    const bool same = surfaces::sk_equivalent(start, current);
    rep.text << "SK-equivalent to start: " << (same ? "yes" : "no") << "\n";
    rep.doc["sk_equivalent"] = same;
    if (!same) {
      rep.code = 1;
      rep.text << "witness: " << surfaces::to_string(start) << " vs " << surfaces::to_string(current) << "\n";
    }
  }
}

void cmd_cob_normal_form(Report& rep, const std::string& word) {
  const auto w = cobordism::parse_word(word);
  const auto c = cobordism::normal_form(w);
  rep.text << cobordism::to_string(c) << "\nchi = " << cobordism::class_chi(c) << "\n";
  json comps = json::array();
  for (const auto& r : c.components) comps.push_back({{"genus", r.genus}, {"in", r.in_positions}, {"out", r.out_positions}});
  rep.doc = {{"dim", c.dim}, {"in", c.in_arity}, {"out", c.out_arity}, {"components", comps}, {"chi", cobordism::class_chi(c)}};
}

void cmd_cob_eval(Report& rep, const std::string& word, const ScalarOptions& scalars) {
  if (!scalars.given()) throw Error(ErrorKind::InvalidSpec, "cob eval needs --cap and --cup (or --cap-exp and --cup-exp)");
  const auto t = scalars.theory();
  const auto value = tqft::evaluate(t, cobordism::parse_word(word));
  rep.text << to_string(value) << "\n";
  rep.doc = {{"theory", tqft::to_string(t)}, {"value", to_string(value)}};
}

void cmd_tqft_verify(Report& rep, std::uint64_t seed, int budget, const ScalarOptions& scalars, bool corrupt) {
  if (!scalars.given()) {
    if (corrupt) throw Error(ErrorKind::InvalidSpec, "--corrupt-pants needs an explicit theory");
    const auto r = selftest::tqft_axioms(seed, budget);
    rep.text << (r.passed ? "ok   " : "FAIL ") << r.name << " on the 5x5 rational grid (" << r.instances << " theories)\n";
    if (!r.passed) rep.text << "  witness: " << r.detail << "\n";
    rep.code = r.passed ? 0 : 1;
    rep.doc = {{"suite", r.name}, {"passed", r.passed}, {"instances", r.instances}, {"witness", r.detail}};
    return;
  }
  const auto t = scalars.theory();
  const auto report = corrupt ? tqft::verify_axioms(tqft::corrupted_pants_evaluator(t), t.variant(), seed, budget)
                              : tqft::verify_axioms(t, seed, budget);
  rep.text << "theory " << tqft::to_string(t) << (corrupt ? " with corrupted pants" : "") << "\n";
  print_law_report(rep, report);
  rep.code = report.ok() ? 0 : 1;
  rep.doc = law_report_json(report);
  rep.doc["theory"] = tqft::to_string(t);
}

void cmd_skk_class(Report& rep, const std::string& input) {
  if (std::filesystem::is_regular_file(input)) {
    const auto k = simplicial::load_complex(input);
    const auto c = skk::skk_class(k);
    rep.text << "SKK class: " << skk::to_string(c) << "\n";
    rep.doc = {{"skk", class_json(c)}};
    if (k.dim() == 2 || k.dim() == 4) {
      const auto sk = skk::sk_class(k);
      if (const auto* z = std::get_if<Integer>(&sk)) {
        rep.text << "SK class: " << *z << "\n";
        rep.doc["sk"] = z->str();
      } else {
        const auto& [a, b] = std::get<std::pair<Integer, Integer>>(sk);
        rep.text << "SK class: (" << a << ", " << b << ")\n";
        rep.doc["sk"] = {a.str(), b.str()};
      }
    }
    return;
  }
  const auto s = surfaces::parse_surface(input);
  const auto c = skk::skk_class(s);
  rep.text << "SKK class: " << skk::to_string(c) << "\n";
  rep.doc = {{"surface", surfaces::to_string(s)}, {"skk", class_json(c)}};
}

void cmd_verify_sequence(Report& rep, int grid, std::uint64_t seed) {
  const auto report = skk::verify_split_sequence(grid, seed);
  json checks = json::array();
  for (const auto& c : report.checks) {
    rep.text << (c.ok() ? "ok   " : "FAIL ") << c.name << " (" << c.instances << " instances)\n";
    for (const auto& w : c.witnesses) rep.text << "  witness: " << w << "\n";
    checks.push_back({{"name", c.name}, {"instances", c.instances}, {"witnesses", c.witnesses}});
  }
  rep.code = report.ok() ? 0 : 1;
  rep.doc = {{"grid", grid}, {"checks", checks}};
}

void cmd_demo_bsigma(Report& rep, const std::string& catalog_path, const std::string& alternative) {
  const auto catalog = catalog_path.empty() ? virtual_bordism::catalogs::dim8_demo() : virtual_bordism::load_catalog(catalog_path);
  const auto& disk = catalog.piece("D8");
  const std::string label = disk.boundary.empty() ? std::string() : disk.boundary.front().name;
  const auto it = catalog.b_sigma_names().find(label);
  if (it == catalog.b_sigma_names().end()) throw Error(ErrorKind::MissingBSigma, "no capping piece for " + label);
  const auto [first, second] = skk::b_sigma_dependence_demo(catalog, alternative);
  rep.text << "choice " << it->second << " ⇒ " << to_string(first) << "; choice " << alternative << " ⇒ " << to_string(second)
           << "\n";
  rep.doc = {{"label", label},
             {"choices", json::array({{{"b_sigma", it->second}, {"value", to_string(first)}},
                                      {{"b_sigma", alternative}, {"value", to_string(second)}}})}};
}

void cmd_selftest(Report& rep, std::uint64_t seed) {
  json suites = json::array();
  for (const auto& r : selftest::run_all(seed)) {
    rep.text << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " checks)\n";
    if (!r.passed) {
      rep.text << "  witness: " << r.detail << "\n";
      rep.code = 1;
    }
    suites.push_back({{"name", r.name}, {"passed", r.passed}, {"instances", r.instances}, {"witness", r.detail}});
  }
  rep.doc = {{"seed", seed}, {"suites", suites}};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact cut-and-paste invariants and invertible field theories", "cutpaste"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable report");

  std::string path, coefficients = "integers", start, word, input, catalog, alternative = "CP4-D8";
  std::uint64_t seed = 1;
  int budget = 200, grid = 9;
  bool corrupt = false;
  ScalarOptions scalars;

  auto* homology = app.add_subcommand("homology", "Betti numbers and torsion of a complex");
  homology->add_option("file", path, "complex JSON")->required();
  homology->add_option("--coefficients", coefficients, "integers, rationals or mod2");

  auto* invariants = app.add_subcommand("invariants", "chi, semicharacteristic, and sigma in dimension 4");
  invariants->add_option("file", path, "complex JSON")->required();

  auto* cutpaste = app.add_subcommand("cutpaste", "run a cut/paste script on a surface");
  cutpaste->add_option("script", path, "script file")->required();
  cutpaste->add_option("--start", start, "starting surface, e.g. 'g2' or 'g1 + g0'")->required();

  auto* cob = app.add_subcommand("cob", "cobordism words");
  cob->require_subcommand(1);
  auto* normal = cob->add_subcommand("normal-form", "classification data of a word");
  normal->add_option("word", word)->required();
  auto* eval = cob->add_subcommand("eval", "value of a word under a theory");
  eval->add_option("word", word)->required();
  scalars.attach(eval);

  auto* tq = app.add_subcommand("tqft", "invertible field theories");
  tq->require_subcommand(1);
  auto* verify = tq->add_subcommand("verify", "check the axioms on random words");
  verify->add_option("--seed", seed);
  verify->add_option("--budget", budget);
  verify->add_flag("--corrupt-pants", corrupt, "send pants to a instead of a^-1");
  scalars.attach(verify);

  auto* sk = app.add_subcommand("skk", "SKK classes and the split sequence");
  sk->require_subcommand(1);
  auto* cls = sk->add_subcommand("class", "SKK class of a complex file or a surface expression");
  cls->add_option("input", input)->required();
  auto* sequence = sk->add_subcommand("verify-sequence", "check the split exact sequence");
  sequence->add_option("--grid", grid);
  sequence->add_option("--seed", seed);
  auto* demo = sk->add_subcommand("demo-bsigma", "dependence of the splitting on the capping choice");
  demo->add_option("--catalog", catalog, "catalog JSON (default: built-in dimension 8 catalog)");
  demo->add_option("--alternative", alternative, "replacement capping piece");

  auto* self = app.add_subcommand("selftest", "run every property suite");
  self->add_option("--seed", seed);

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  Report rep;
  try {
    if (*homology) cmd_homology(rep, path, coefficients);
    else if (*invariants) cmd_invariants(rep, path);
    else if (*cutpaste) cmd_cutpaste(rep, path, start);
    else if (*normal) cmd_cob_normal_form(rep, word);
    else if (*eval) cmd_cob_eval(rep, word, scalars);
    else if (*verify) cmd_tqft_verify(rep, seed, budget, scalars, corrupt);
    else if (*cls) cmd_skk_class(rep, input);
    else if (*sequence) cmd_verify_sequence(rep, grid, seed);
    else if (*demo) cmd_demo_bsigma(rep, catalog, alternative);
    else if (*self) cmd_selftest(rep, seed);
  } catch (const Error& e) {
    result.exit_code = e.kind() == ErrorKind::InternalInvariantViolation ? 1 : 2;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  } catch (const json::exception& e) {
    result.exit_code = 2;
    result.err = std::string("error: FormatError: ") + e.what() + "\n";
    return result;
  }

  result.exit_code = rep.code;
  if (as_json) {
    rep.doc["schema"] = 1;
    rep.doc["exit_code"] = rep.code;
    result.out = rep.doc.dump(2) + "\n";
  } else {
    result.out = rep.text.str();
  }
  return result;
}

}  // namespace cutpaste::cli
