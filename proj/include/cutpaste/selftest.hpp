#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cutpaste::selftest {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long instances = 0;
  std::string detail;  // first witness when failed
};

// Seeded random cut/paste sequences on random surfaces; chi must be
// constant and closed endpoints SK-equivalent.
SuiteResult cut_paste_invariance(std::uint64_t seed, int sequences = 200, int max_moves = 12);
// Two pieces reglued by the same two matchings: class differences agree.
SuiteResult skk_error_term(std::uint64_t seed, int trials = 500);
SuiteResult linear_algebra_laws(std::uint64_t seed, int trials = 60);
SuiteResult fixture_homology();
SuiteResult signature_laws();
SuiteResult cobordism_normal_forms(std::uint64_t seed, int trials = 200);
SuiteResult tqft_axioms(std::uint64_t seed, int budget = 200);
SuiteResult kernel_theorem(std::uint64_t seed, int trials = 100);
SuiteResult boundary_dependence(std::uint64_t seed, int trials = 100);
SuiteResult theta_multiplicativity(std::uint64_t seed, int gluings = 300);
SuiteResult gluing_lemma(std::uint64_t seed, int triples = 300);
SuiteResult split_sequence(std::uint64_t seed);
SuiteResult b_sigma_dependence();
SuiteResult negative_controls(std::uint64_t seed);

// Every suite above with its default size.
std::vector<SuiteResult> run_all(std::uint64_t seed);

}  // namespace cutpaste::selftest
