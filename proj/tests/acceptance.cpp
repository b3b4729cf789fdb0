// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "cutpaste/cobordism.hpp"
#include "cutpaste/error.hpp"
#include "cutpaste/intersection_form.hpp"
#include "cutpaste/selftest.hpp"
#include "cutpaste/simplicial.hpp"
#include "cutpaste/skk.hpp"
#include "cutpaste/tqft.hpp"
#include "cutpaste/virtual_bordism.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace cutpaste;
namespace fx = cutpaste::simplicial::fixtures;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome from_suite(const selftest::SuiteResult& r) {
  return {r.passed, r.passed ? std::to_string(r.instances) + " checks" : r.detail};
}

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    out.ok = false;
    out.detail += "; over the " + std::to_string(limit_seconds) + " s limit";
  }
  if (!out.ok) ++failures;
  std::printf("criterion %2d %s: %s (%s; %.3f s)\n", number, out.ok ? "PASS" : "FAIL", title, out.detail.c_str(), seconds);
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "homology fixtures", 1.0, [] {
    using B = std::vector<std::size_t>;
    const bool ok = simplicial::homology(fx::sphere(2)).betti == B{1, 0, 1} &&
                    simplicial::homology(fx::sphere(3)).betti == B{1, 0, 0, 1} &&
                    simplicial::homology(fx::torus7()).betti == B{1, 2, 1};
    return Outcome{ok, "S2 (1,0,1), S3 (1,0,0,1), T2 (1,2,1)"};
  });

  criterion(2, "SK classification values", 30.0, [] {
    using P = std::pair<Integer, Integer>;
    const auto cp2 = fx::cp2_9();
    const Integer chi = simplicial::euler_characteristic(cp2);
    const long sigma = intersection_form::signature(cp2);
    const auto s4 = std::get<P>(skk::sk_class(fx::sphere(4)));
    const auto c = std::get<P>(skk::sk_class(cp2));
    const bool ok = s4 == P{1, 0} && c == P{1, 1} && chi == 3 && sigma == 1;
    return Outcome{ok, "S4 (" + s4.first.str() + "," + s4.second.str() + "), CP2 (" + c.first.str() + "," + c.second.str() +
                           ") with chi " + chi.str() + ", sigma " + std::to_string(sigma)};
  });

  criterion(3, "kernel table for n = 1..12", 0, [] {
    std::string row;
    bool ok = true;
    for (int n = 1; n <= 12; ++n) {
      const auto g = skk::i_n_table(n);
      const auto expected = n % 2 == 0 ? skk::Group::Integers : (n % 4 == 1 ? skk::Group::Mod2 : skk::Group::Zero);
      ok = ok && g == expected;
      row += (n > 1 ? " " : "") + skk::to_string(g);
    }
    return Outcome{ok, row};
  });

  criterion(4, "cut-and-paste invariance", 1.0, [] { return from_suite(selftest::cut_paste_invariance(kSeed, 200, 12)); });

  criterion(5, "SKK error term", 0, [] { return from_suite(selftest::skk_error_term(kSeed, 500)); });

  criterion(6, "TQFT axioms on 25 rational theories", 5.0, [] { return from_suite(selftest::tqft_axioms(kSeed, 200)); });

  criterion(7, "kernel theorem and nontriviality", 0, [] {
    const tqft::InvertibleTQFT2 t{GroupScalar::rational(2), GroupScalar::rational(Rational(1, 2))};
    Rng rng(kSeed);
    bool ok = true;
    for (int i = 0; i < 100; ++i) ok = ok && tqft::evaluate(t, cobordism::random_word(rng, 0, 0, 6)).is_one();
    ok = ok && tqft::evaluate(t, cobordism::parse_word("cap")) == GroupScalar::rational(2);
    int grid = 0;
    for (const auto& a : skk::grid_axis(9))
      for (const auto& e : skk::grid_axis(9)) {
        const tqft::InvertibleTQFT2 s{a, e};
        ok = ok && skk::kernel_membership(s) == skk::abs_psi(s).is_trivial();
        ++grid;
      }
    return Outcome{ok, "100 closed words give 1, cap gives 2, " + std::to_string(grid) + " grid theories"};
  });

  criterion(8, "boundary dependence of kernel theories", 0, [] {
    const tqft::InvertibleTQFT2 t{GroupScalar::rational(2), GroupScalar::rational(Rational(1, 2))};
    const auto r = tqft::boundary_dependence_check(t, kSeed, 100);
    return Outcome{r.ok(), r.ok() ? "100 pairs, closed form e^(in-out)" : r.violations.front().witness};
  });

  criterion(9, "multiplicativity criterion", 0, [] {
    const auto two = tqft::check_theta_defines_tqft(tqft::theta_exp_chi(), 2, kSeed, 300);
    const auto one = tqft::check_theta_defines_tqft(tqft::theta_exp_chi(), 1, kSeed, 300);
    const std::string expected = "two arcs glued to a circle: exp(1)·exp(1) ≠ exp(0)";
    const bool ok = two.multiplicative && two.gluings >= 300 && !one.multiplicative && one.witness == expected;
    return Outcome{ok, "dim 2 over " + std::to_string(two.gluings) + " gluings; dim 1 witness \"" + one.witness + "\""};
  });

  criterion(10, "gluing relation in dims 2 and 4", 0, [] { return from_suite(selftest::gluing_lemma(kSeed, 300)); });

  criterion(11, "split exact sequence on the 9x9 grid", 5.0, [] {
    const auto r = skk::verify_split_sequence(9, kSeed);
    std::string detail;
    for (const auto& c : r.checks)
      detail += (detail.empty() ? "" : ", ") + c.name + (c.ok() ? " ok" : " FAILED: " + c.witnesses.front());
    return Outcome{r.ok() && r.checks.size() == 4, detail};
  });

  criterion(12, "capping-choice dependence", 0, [] {
    const auto [first, second] = skk::b_sigma_dependence_demo(virtual_bordism::catalogs::dim8_demo());
    const bool ok = first == GroupScalar::exp(0) && second == GroupScalar::exp(10);
    return Outcome{ok, "choice D8 gives " + to_string(first) + ", choice CP4-D8 gives " + to_string(second)};
  });

  criterion(13, "negative controls", 0, [] {
    const tqft::InvertibleTQFT2 t{GroupScalar::rational(2), GroupScalar::rational(3)};
    const auto bad = tqft::verify_axioms(tqft::corrupted_pants_evaluator(t), GroupScalar::Variant::Rational, kSeed, 200);
    const auto split = skk::verify_split_sequence(9, kSeed, skk::mismatched_splitting());
    const bool ok = !bad.ok() && !bad.violations.front().witness.empty() && !split.checks[2].ok();
    return Outcome{ok, ok ? "corrupted theory: " + bad.violations.front().law + " violated; mismatched splitting: " +
                                split.checks[2].witnesses.front()
                          : "a control passed"};
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
