#include "catch_amalgamated.hpp"

#include "cutpaste/cli.hpp"
#include "support.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

using cutpaste::cli::run;
using testing::source_path;

namespace {

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("homology and invariants of fixture files") {
  const auto h = run({"homology", source_path("fixtures/torus7.json")});
  CHECK(h.exit_code == 0);
  CHECK(h.out == "betti = (1,2,1)\n");
  const auto rp2 = run({"homology", source_path("fixtures/rp2_6.json")});
  CHECK(contains(rp2.out, "torsion H_1: Z/2"));

  const auto inv = run({"invariants", source_path("fixtures/cp2_9.json")});
  CHECK(inv.exit_code == 0);
  CHECK(contains(inv.out, "chi = 3\n"));
  CHECK(contains(inv.out, "sigma = 1\n"));
  CHECK(contains(inv.out, "chi_half = 3/2\n"));

  const auto js = run({"invariants", source_path("fixtures/cp2_9.json"), "--json"});
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("chi") == "3");
  CHECK(doc.at("sigma") == 1);
}

TEST_CASE("cobordism subcommands") {
  const auto e = run({"cob", "eval", "cap ; cup", "--cap", "2", "--cup", "3"});
  CHECK(e.exit_code == 0);
  CHECK(e.out == "6\n");
  CHECK(run({"cob", "eval", "cap", "--cap-exp", "1/2", "--cup-exp", "0"}).out == "exp(1/2)\n");
  const auto mixed = run({"cob", "eval", "cap", "--cap", "2", "--cup-exp", "1"});
  CHECK(mixed.exit_code == 2);
  CHECK(contains(mixed.err, "VariantMismatch"));
  const auto nf = run({"cob", "normal-form", "copants ; pants"});
  CHECK(nf.exit_code == 0);
  CHECK(contains(nf.out, "g1"));
  const auto bad = run({"cob", "normal-form", "pants ; pants"});
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "ArityMismatch"));
}

TEST_CASE("tqft verification") {
  CHECK(run({"tqft", "verify", "--seed", "3", "--budget", "20"}).exit_code == 0);
  CHECK(run({"tqft", "verify", "--cap", "2", "--cup", "3", "--budget", "20"}).exit_code == 0);
  const auto bad = run({"tqft", "verify", "--cap", "2", "--cup", "3", "--budget", "20", "--corrupt-pants"});
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "witness"));
}

TEST_CASE("skk subcommands") {
  CHECK(run({"skk", "class", "g2 + g0"}).out == "SKK class: 0\n");
  const auto cp2 = run({"skk", "class", source_path("fixtures/cp2_9.json")});
  CHECK(contains(cp2.out, "SKK class: (3, 1)"));
  CHECK(contains(cp2.out, "SK class: (1, 1)"));
  CHECK(run({"skk", "class", "g1b1"}).exit_code == 2);

  const auto seq = run({"skk", "verify-sequence", "--grid", "5", "--seed", "2"});
  CHECK(seq.exit_code == 0);
  CHECK(contains(seq.out, "ok   homomorphism"));

  const auto demo = run({"skk", "demo-bsigma"});
  CHECK(demo.exit_code == 0);
  CHECK(demo.out == "choice D8 ⇒ 1; choice CP4-D8 ⇒ exp(10)\n");
  CHECK(run({"skk", "demo-bsigma", "--catalog", source_path("catalogs/dim8.json")}).out == demo.out);
}

TEST_CASE("cut and paste scripts") {
  const std::string path = "cli_script.txt";
  std::ofstream(path) << "cut 0 sep 1 -\ncut 1 nonsep\npaste 1~2\npaste 0~1\n";
  const auto r = run({"cutpaste", path, "--start", "g2"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "step 3: paste 1~2"));
  CHECK(contains(r.out, "SK-equivalent to start: yes"));

  std::ofstream("cli_bad_script.txt") << "cut 0 nonsep\nbend 3\n";
  const auto bad = run({"cutpaste", "cli_bad_script.txt", "--start", "g2"});
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "line 2"));
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"homology"}).exit_code == 2);
  CHECK(run({"homology", "/nonexistent.json"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
  std::ofstream("cli_malformed.json") << "{\"dim\": 2, \"facets\": 7}";
  const auto malformed = run({"homology", "cli_malformed.json"});
  CHECK(malformed.exit_code == 2);
  CHECK(contains(malformed.err, "cli_malformed.json"));
}

TEST_CASE("reports are deterministic") {
  const auto a = run({"selftest", "--seed", "5", "--json"});
  const auto b = run({"selftest", "--seed", "5", "--json"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("suites").size() == 14);
}
