#include "cutpaste/selftest.hpp"

#include "cutpaste/cobordism.hpp"
#include "cutpaste/error.hpp"
#include "cutpaste/exact_linalg.hpp"
#include "cutpaste/intersection_form.hpp"
#include "cutpaste/random.hpp"
#include "cutpaste/simplicial.hpp"
#include "cutpaste/skk.hpp"
#include "cutpaste/surfaces.hpp"
#include "cutpaste/tqft.hpp"
#include "cutpaste/virtual_bordism.hpp"

#include <numeric>

namespace cutpaste::selftest {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }
  // Records one checked instance; keeps the first failure's witness.
  void expect(bool ok, const std::string& witness) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = witness;
    }
  }
  template <typename F>
  void guard(F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, std::string("unexpected exception: ") + e.what());
    }
  }
  SuiteResult done() { return result_; }

 private:
  SuiteResult result_;
};

surfaces::Surface with_circles(Rng& rng, int circles) {
  const int n = uniform_int(rng, 1, 3);
  std::vector<surfaces::SurfaceComponent> comps;
  for (int i = 0; i < n; ++i) comps.push_back({uniform_int(rng, 0, 3), 0});
  for (int c = 0; c < circles; ++c) comps[static_cast<std::size_t>(uniform_int(rng, 0, n - 1))].boundary += 1;
  return surfaces::Surface(std::move(comps));
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform_int(rng, -bound, bound);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix p = IntMatrix::identity(n);
  for (int step = 0; step < 8 && n > 1; ++step) {
    const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    p.add_row_multiple(i, j, Integer(uniform_int(rng, -2, 2)));
  }
  return p;
}

bool divides(const Integer& a, const Integer& b) { return a != 0 && b % a == 0; }

std::string betti_string(const std::vector<std::size_t>& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  return out + ")";
}

}  // namespace

SuiteResult cut_paste_invariance(std::uint64_t seed, int sequences, int max_moves) {
  Suite suite("cut-and-paste invariance");
  for (int s = 0; s < sequences; ++s) {
    suite.guard([&] {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
      const surfaces::Surface start = surfaces::random_surface(rng, 4, 5, 0);
      surfaces::Surface current = start;
      const long chi0 = surfaces::chi(start);
      const int moves = uniform_int(rng, 1, max_moves - 1);
      for (int m = 0; m < moves; ++m) {
        const bool paste = current.circle_count() >= 2 && coin(rng);
        surfaces::Move move = paste ? surfaces::Move(surfaces::random_paste(rng, current))
                                    : surfaces::Move(surfaces::random_cut(rng, current));
        current = surfaces::apply(current, move);
        suite.expect(surfaces::chi(current) == chi0, "sequence " + std::to_string(s) + ": chi changed after '" +
                                                         surfaces::to_string(move) + "'");
      }
      if (!current.is_closed()) current = surfaces::paste(current, surfaces::random_closing_paste(rng, current));
      suite.expect(surfaces::chi(current) == chi0, "sequence " + std::to_string(s) + ": chi changed on closing");
      suite.expect(surfaces::sk_equivalent(start, current),
                   "sequence " + std::to_string(s) + ": " + surfaces::to_string(start) + " vs " + surfaces::to_string(current));
    });
  }
  return suite.done();
}

SuiteResult skk_error_term(std::uint64_t seed, int trials) {
  Suite suite("SKK error term");
  for (int t = 0; t < trials; ++t) {
    suite.guard([&] {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
      const int circles = 2 * uniform_int(rng, 1, 3);
      const surfaces::Surface p = with_circles(rng, circles);
      const surfaces::Surface q = with_circles(rng, circles);
      const surfaces::PasteSpec f = surfaces::random_closing_paste(rng, p);
      const surfaces::PasteSpec g = surfaces::random_closing_paste(rng, p);
      const auto cls = [](const surfaces::Surface& s) { return std::get<Integer>(skk::skk_class(s).value); };
      const Integer lhs = cls(surfaces::paste(p, f)) - cls(surfaces::paste(p, g));
      const Integer rhs = cls(surfaces::paste(q, f)) - cls(surfaces::paste(q, g));
      suite.expect(lhs == rhs, "trial " + std::to_string(t) + ": " + lhs.str() + " vs " + rhs.str());
    });
  }
  return suite.done();
}

SuiteResult linear_algebra_laws(std::uint64_t seed, int trials) {
  Suite suite("exact linear algebra");
  for (int t = 0; t < trials; ++t) {
    suite.guard([&] {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
      const auto rows = static_cast<std::size_t>(uniform_int(rng, 1, 6));
      const auto cols = static_cast<std::size_t>(uniform_int(rng, 1, 6));
      const IntMatrix a = random_matrix(rng, rows, cols, 9);
      const SNFResult snf = smith_normal_form(a);
      suite.expect(snf.left * a * snf.right == snf.diagonal_matrix(rows, cols), "U A V != D for " + to_string(a));
      for (std::size_t i = 0; i + 1 < snf.diag.size(); ++i)
        suite.expect(divides(snf.diag[i], snf.diag[i + 1]), "divisibility chain broken for " + to_string(a));
      suite.expect(abs(determinant(snf.left)) == 1 && abs(determinant(snf.right)) == 1, "transform not unimodular");
      suite.expect(rational_rank(a) == snf.rank() && rational_rank(a.transpose()) == snf.rank(), "rank disagreement");

      const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 5));
      IntMatrix half = random_matrix(rng, n, n, 3);
      IntMatrix sym = half;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sym(i, j) = half(i, j) + half(j, i);
      const IntMatrix p = random_unimodular(rng, n);
      const IntMatrix congruent = p.transpose() * sym * p;
      suite.expect(symmetric_signature(to_rational(sym)) == symmetric_signature(to_rational(congruent)),
                   "Sylvester's law fails for " + to_string(sym));
    });
  }
  return suite.done();
}

SuiteResult fixture_homology() {
  namespace sx = simplicial;
  Suite suite("fixture homology");
  suite.guard([&] {
    const std::pair<std::string, sx::SimplicialComplex> fixtures[] = {
        {"S2", sx::fixtures::sphere(2)}, {"S3", sx::fixtures::sphere(3)},   {"S4", sx::fixtures::sphere(4)},
        {"T2", sx::fixtures::torus7()},  {"CP2", sx::fixtures::cp2_9()},
    };
    const std::vector<std::vector<std::size_t>> expected = {{1, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 0, 1}, {1, 2, 1}, {1, 0, 1, 0, 1}};
    for (std::size_t i = 0; i < std::size(fixtures); ++i) {
      const auto& [name, k] = fixtures[i];
      const auto h = sx::homology(k);
      suite.expect(h.betti == expected[i], name + ": betti " + betti_string(h.betti));
      Integer alternating = 0;
      for (std::size_t d = 0; d < h.betti.size(); ++d) alternating += (d % 2 == 0 ? 1 : -1) * Integer(h.betti[d]);
      suite.expect(alternating == sx::euler_characteristic(k), name + ": chi differs from the alternating betti sum");
      for (std::size_t d = 0; d < h.betti.size(); ++d)
        suite.expect(h.betti[d] == h.betti[h.betti.size() - 1 - d], name + ": Poincare duality fails");
      suite.expect(sx::orientation_is_cycle(sx::orient(k)), name + ": orientation is not a cycle");
      const auto mod2 = sx::homology(k, sx::Coefficients::Mod2);
      for (std::size_t d = 0; d < h.betti.size(); ++d) suite.expect(mod2.betti[d] >= h.betti[d], name + ": mod-2 rank below rational rank");
    }
    bool rejected = false;
    try {
      sx::orient(sx::fixtures::projective_plane6());
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::NotOrientable;
    }
    suite.expect(rejected, "projective plane was oriented");
  });
  return suite.done();
}

SuiteResult signature_laws() {
  namespace sx = simplicial;
  Suite suite("signature");
  suite.guard([&] {
    const auto cp2 = sx::fixtures::cp2_9();
    const auto s4 = sx::fixtures::sphere(4);
    suite.expect(intersection_form::signature(cp2) == 1, "sigma(CP2) != 1");
    suite.expect(intersection_form::signature(cp2.reversed()) == -1, "sigma(reversed CP2) != -1");
    suite.expect(intersection_form::signature(s4) == 0, "sigma(S4) != 0");
    suite.expect(intersection_form::signature(sx::disjoint_union(cp2, cp2.reversed())) == 0, "sigma(CP2 + reversed) != 0");
    suite.expect(intersection_form::signature(sx::disjoint_union(cp2, cp2)) == 2, "sigma not additive");
    for (const auto& k : {cp2, s4}) {
      const long sigma = intersection_form::signature(k);
      suite.expect((sx::euler_characteristic(k) - sigma) % 2 == 0, "sigma and chi differ in parity");
    }
    const auto cls = skk::sk_class(cp2);
    suite.expect(std::get<std::pair<Integer, Integer>>(cls) == std::pair<Integer, Integer>{1, 1}, "SK class of CP2 != (1,1)");
  });
  return suite.done();
}

SuiteResult cobordism_normal_forms(std::uint64_t seed, int trials) {
  namespace cb = cobordism;
  Suite suite("cobordism normal forms");
  for (int t = 0; t < trials; ++t) {
    suite.guard([&] {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
      const int in = uniform_int(rng, 0, 3);
      const int mid = uniform_int(rng, 0, 3);
      const int out = uniform_int(rng, 0, 3);
      const cb::CobordismWord m1 = cb::random_word(rng, in, mid, 4);
      const cb::CobordismWord m2 = cb::random_word(rng, mid, out, 4);
      const std::string id = "trial " + std::to_string(t) + " \"" + cb::to_string(m1) + "\"";
      suite.expect(cb::equivalent(m1, cb::scramble(rng, m1, 4)), id + ": rewrite changed the class");
      suite.expect(cb::word_chi(m1) == cb::class_chi(cb::normal_form(m1)), id + ": chi bookkeeping differs");

      const cb::CobordismWord n1 = cb::random_word(rng, out, in, 3);
      const cb::CobordismWord n2 = cb::random_word(rng, in, mid, 3);
      const auto interchange_lhs = cb::tensor(cb::compose(m1, m2), cb::compose(n1, n2));
      const auto interchange_rhs = cb::compose(cb::tensor(m1, n1), cb::tensor(m2, n2));
      suite.expect(cb::equivalent(interchange_lhs, interchange_rhs), id + ": interchange law fails");

      const cb::CobordismClass c = cb::normal_form(m1);
      if (c.components.size() == 1) {
        const auto& r = c.components.front();
        suite.expect(cb::equivalent(m1, cb::canonical_word(r.genus, in, mid)), id + ": classification is not complete");
      }
      const cb::CobordismWord w1 = cb::random_word_dim1(rng, in, in + 2 * uniform_int(rng, 0, 1), 4);
      suite.expect(cb::equivalent(w1, cb::scramble(rng, w1, 3)), id + ": dimension-1 rewrite changed the class");
    });
  }
  return suite.done();
}

SuiteResult tqft_axioms(std::uint64_t seed, int budget) {
  Suite suite("TQFT axioms");
  const std::vector<Rational> values{Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(-3, 5)};
  std::uint64_t index = 0;
  for (const auto& a : values) {
    for (const auto& e : values) {
      suite.guard([&] {
        const tqft::InvertibleTQFT2 t{GroupScalar::rational(a), GroupScalar::rational(e)};
        const auto report = tqft::verify_axioms(t, derive_seed(seed, index), budget);
        suite.expect(report.ok(), tqft::to_string(t) + ": " +
                                      (report.ok() ? "" : report.violations.front().law + ": " + report.violations.front().witness));
      });
      ++index;
    }
  }
  return suite.done();
}

SuiteResult kernel_theorem(std::uint64_t seed, int trials) {
  Suite suite("kernel theorem");
  suite.guard([&] {
    const tqft::InvertibleTQFT2 t{GroupScalar::rational(2), GroupScalar::rational(Rational(1, 2))};
    for (int i = 0; i < trials; ++i) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      const auto w = cobordism::random_word(rng, 0, 0, 6);
      suite.expect(tqft::evaluate(t, w).is_one(), "closed word \"" + cobordism::to_string(w) + "\" is not 1");
    }
    suite.expect(tqft::evaluate(t, cobordism::parse_word("cap")) == GroupScalar::rational(2), "cap does not give 2");

    // Over small rationals: trivial on closed words iff ae = 1.
    std::vector<Rational> small;
    for (int p = -5; p <= 5; ++p)
      for (int q = 1; q <= 5; ++q)
        if (p != 0 && std::gcd(p, q) == 1) small.emplace_back(p, q);
    Rng rng(derive_seed(seed, 0x6772696400ULL));
    std::vector<cobordism::CobordismWord> closed{cobordism::canonical_word(0, 0, 0)};
    for (int i = 0; i < 6; ++i) closed.push_back(cobordism::random_word(rng, 0, 0, 5));
    for (const auto& a : small) {
      for (const auto& e : small) {
        const tqft::InvertibleTQFT2 s{GroupScalar::rational(a), GroupScalar::rational(e)};
        bool trivial = true;
        for (const auto& w : closed) trivial = trivial && tqft::evaluate(s, w).is_one();
        suite.expect(trivial == (a * e == 1), tqft::to_string(s) + ": kernel characterisation fails");
      }
    }
    for (const auto& a : skk::grid_axis(9))
      for (const auto& e : skk::grid_axis(9)) {
        const tqft::InvertibleTQFT2 s{a, e};
        suite.expect(skk::kernel_membership(s) == skk::abs_psi(s).is_trivial(), tqft::to_string(s) + ": kernel != trivial |psi|");
      }
  });
  return suite.done();
}

SuiteResult boundary_dependence(std::uint64_t seed, int trials) {
  Suite suite("boundary dependence");
  suite.guard([&] {
    const tqft::InvertibleTQFT2 kernel[] = {
        {GroupScalar::rational(2), GroupScalar::rational(Rational(1, 2))},
        {GroupScalar::exp(1), GroupScalar::exp(-1)},
        tqft::InvertibleTQFT2::trivial(GroupScalar::Variant::Rational),
    };
    for (const auto& t : kernel) {
      const auto report = tqft::boundary_dependence_check(t, seed, trials);
      suite.expect(report.ok(), tqft::to_string(t) + ": " + (report.ok() ? "" : report.violations.front().witness));
    }
    bool rejected = false;
    try {
      tqft::boundary_dependence_check({GroupScalar::rational(2), GroupScalar::rational(3)}, seed, 1);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::NotInKernel;
    }
    suite.expect(rejected, "(a=2, e=3) accepted as a kernel member");
  });
  return suite.done();
}

SuiteResult theta_multiplicativity(std::uint64_t seed, int gluings) {
  Suite suite("multiplicativity criterion");
  suite.guard([&] {
    const auto exp_chi = tqft::theta_exp_chi();
    const auto two = tqft::check_theta_defines_tqft(exp_chi, 2, seed, gluings);
    suite.expect(two.multiplicative && two.gluings == gluings + 1, "exp(chi) in dimension 2: " + two.witness);
    const auto one = tqft::check_theta_defines_tqft(exp_chi, 1, seed, gluings);
    suite.expect(!one.multiplicative && one.witness == "two arcs glued to a circle: exp(1)·exp(1) ≠ exp(0)",
                 "exp(chi) in dimension 1 gave witness '" + one.witness + "'");
    for (int dim : {1, 2}) {
      const auto constant = tqft::check_theta_defines_tqft(tqft::theta_constant_one(), dim, seed, gluings);
      suite.expect(constant.multiplicative, "constant 1 in dimension " + std::to_string(dim) + ": " + constant.witness);
    }
  });
  return suite.done();
}

SuiteResult gluing_lemma(std::uint64_t seed, int triples) {
  namespace vb = virtual_bordism;
  Suite suite("gluing lemma");
  for (int i = 0; i < triples; ++i) {
    suite.guard([&] {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      for (int dim : {2, 4}) {
        const auto x = vb::random_triple(rng, dim);
        for (auto which : {vb::Invariant::Chi, vb::Invariant::Sigma}) {
          const auto [lhs, rhs] = vb::lemma_relation_sides(x[0], x[1], x[2], which);
          suite.expect(lhs == rhs, "triple " + std::to_string(i) + " in dimension " + std::to_string(dim) + ": " +
                                       std::to_string(lhs) + " vs " + std::to_string(rhs));
        }
        suite.expect(vb::double_piece(x[1]).sigma == 0, "double has nonzero signature");
      }
    });
  }
  return suite.done();
}

SuiteResult split_sequence(std::uint64_t seed) {
  Suite suite("split exact sequence");
  suite.guard([&] {
    const auto report = skk::verify_split_sequence(9, seed);
    for (const auto& check : report.checks)
      suite.expect(check.ok(), check.name + ": " + (check.ok() ? "" : check.witnesses.front()));
  });
  return suite.done();
}

SuiteResult b_sigma_dependence() {
  Suite suite("capping-choice dependence");
  suite.guard([&] {
    const auto [first, second] = skk::b_sigma_dependence_demo(virtual_bordism::catalogs::dim8_demo());
    suite.expect(first == GroupScalar::exp(0), "choice D8 gave " + to_string(first));
    suite.expect(second == GroupScalar::exp(10), "choice CP4-D8 gave " + to_string(second));
  });
  return suite.done();
}

SuiteResult negative_controls(std::uint64_t seed) {
  Suite suite("negative controls");
  suite.guard([&] {
    const tqft::InvertibleTQFT2 t{GroupScalar::rational(2), GroupScalar::rational(3)};
    const auto report = tqft::verify_axioms(tqft::corrupted_pants_evaluator(t), GroupScalar::Variant::Rational, seed, 50);
    bool functoriality = false;
    for (const auto& v : report.violations) functoriality = functoriality || v.law == "functoriality";
    suite.expect(functoriality, "corrupted evaluator passed functoriality");
    const auto split = skk::verify_split_sequence(9, seed, skk::mismatched_splitting());
    suite.expect(!split.checks[2].ok(), "mismatched splitting passed |psi| S = id");
  });
  return suite.done();
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
  return {
      linear_algebra_laws(derive_seed(seed, 1)),
      fixture_homology(),
      signature_laws(),
      cut_paste_invariance(derive_seed(seed, 2)),
      skk_error_term(derive_seed(seed, 3)),
      cobordism_normal_forms(derive_seed(seed, 4)),
      tqft_axioms(derive_seed(seed, 5)),
      kernel_theorem(derive_seed(seed, 6)),
      boundary_dependence(derive_seed(seed, 7)),
      theta_multiplicativity(derive_seed(seed, 8)),
      gluing_lemma(derive_seed(seed, 9)),
      split_sequence(derive_seed(seed, 10)),
      b_sigma_dependence(),
      negative_controls(derive_seed(seed, 11)),
  };
}

}  // namespace cutpaste::selftest
