#include "catch_amalgamated.hpp"

#include "cutpaste/cobordism.hpp"
#include "cutpaste/simplicial.hpp"
#include "cutpaste/skk.hpp"
#include "support.hpp"

using namespace cutpaste;
using namespace cutpaste::skk;
using testing::error_kind;
using tqft::InvertibleTQFT2;
using tqft::product;
namespace fx = cutpaste::simplicial::fixtures;

namespace {

GroupScalar q(long p, long d = 1) { return GroupScalar::rational(Rational(p, d)); }
simplicial::SimplicialComplex circle() { return simplicial::SimplicialComplex(1, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("SKK classes") {
  CHECK(skk_class(fx::torus7()) == SKKClass{2, Integer(0)});
  CHECK(skk_class(simplicial::disjoint_union(fx::sphere(2), fx::sphere(2))) == SKKClass{2, Integer(2)});
  CHECK(skk_class(fx::cp2_9()) == SKKClass{4, SKKClass::ChiSigma{3, 1}});
  CHECK(skk_class(circle()) == SKKClass{1, SKKClass::Mod2{true}});
  CHECK(skk_class(simplicial::disjoint_union(circle(), circle())) == SKKClass{1, SKKClass::Mod2{false}});
  CHECK(skk_class(surfaces::Surface({{0, 0}, {3, 0}})) == SKKClass{2, Integer(-1)});
  CHECK(to_string(skk_class(fx::cp2_9())) == "(3, 1)");
  CHECK(skk_class(fx::cp2_9()) + skk_class(fx::cp2_9().reversed()) == SKKClass{4, SKKClass::ChiSigma{6, 0}});
  CHECK(error_kind([] { skk_class(fx::sphere(3)); }) == ErrorKind::UnsupportedDimension);
  CHECK(error_kind([] { skk_class(simplicial::SimplicialComplex(2, {{0, 1, 2}})); }) == ErrorKind::NotClosed);
  CHECK(error_kind([] { skk_class(surfaces::Surface({{0, 1}})); }) == ErrorKind::NotClosed);
  CHECK(error_kind([] { skk_class(fx::torus7()) + skk_class(fx::cp2_9()); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("kernel of SKK to SK") {
  const std::vector<Group> expected{Group::Mod2, Group::Integers, Group::Zero, Group::Integers, Group::Mod2, Group::Integers,
                                    Group::Zero, Group::Integers, Group::Mod2, Group::Integers, Group::Zero, Group::Integers};
  for (int n = 1; n <= 12; ++n) CHECK(i_n_table(n) == expected[static_cast<std::size_t>(n - 1)]);
  CHECK(to_string(Group::Mod2) == "Z/2");
  CHECK(error_kind([] { i_n_table(0); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("SK classes") {
  using Pair = std::pair<Integer, Integer>;
  CHECK(std::get<Pair>(sk_class(fx::sphere(4))) == Pair{1, 0});
  CHECK(std::get<Pair>(sk_class(fx::cp2_9())) == Pair{1, 1});
  CHECK(std::get<Integer>(sk_class(fx::sphere(2))) == 1);
  CHECK(error_kind([] { sk_class_from(4, 3, 0); }) == ErrorKind::OddParity);
  CHECK(error_kind([] { sk_class_from(2, 3, 0); }) == ErrorKind::OddParity);
  CHECK(error_kind([] { sk_class_from(6, 2, 0); }) == ErrorKind::UnsupportedDimension);
}

TEST_CASE("homomorphism shapes") {
  CHECK(hom_structure(3).shape == HomStructure::Shape::Zero);
  CHECK(hom_structure(2).shape == HomStructure::Shape::ChiStar);
  CHECK(hom_structure(6).shape == HomStructure::Shape::ChiStar);
  const auto four = hom_structure(4);
  CHECK(four.shape == HomStructure::Shape::ChiStarPlusBordism);
  CHECK(four.bordism_rank == 1);
  CHECK(hom_structure(8).bordism_rank == 2);
  CHECK(hom_structure(12).bordism_rank == 3);
  CHECK(hom_structure(4, 5).bordism_rank == 5);
}

TEST_CASE("restriction to closed manifolds") {
  const InvertibleTQFT2 t{q(2), q(3)};
  CHECK(evaluate(psi(t), surfaces::Surface({{0, 0}})) == q(6));
  CHECK(evaluate(psi(t), surfaces::Surface({{2, 0}})) == q(1, 6));
  CHECK(psi(InvertibleTQFT2{q(2), q(1, 2)}).is_trivial());
  CHECK(abs_psi(InvertibleTQFT2{q(-1), q(1)}).is_trivial());
  CHECK_FALSE(psi(InvertibleTQFT2{q(-1), q(1)}).is_trivial());

  const InvertibleTQFT2 e{GroupScalar::exp(1), GroupScalar::exp(0)};
  for (int g = 0; g <= 3; ++g) {
    const surfaces::Surface s({{g, 0}});
    CHECK(evaluate(abs_psi(e), s) == GroupScalar::exp(1 - g));
    CHECK(evaluate(psi(e), s) == GroupScalar::exp(1 - g));
  }

  Rng rng(derive_seed(61, 0));
  const InvertibleTQFT2 u{q(-3, 2), q(5)};
  for (int i = 0; i < 50; ++i) {
    const auto m = cobordism::random_word(rng, 0, 0, 6);
    const auto c = cobordism::normal_form(m);
    long chi = cobordism::class_chi(c);
    CHECK(evaluate(psi(product(t, u)), chi, 0) == evaluate(pointwise_product(psi(t), psi(u)), chi, 0));
    CHECK(evaluate(psi(t), chi, 0) == tqft::evaluate(t, m));
    CHECK(evaluate(abs_psi(product(t, u)), chi, 0) == evaluate(abs_psi(t), chi, 0) * evaluate(abs_psi(u), chi, 0));
  }
}

TEST_CASE("kernel membership") {
  CHECK(kernel_membership({GroupScalar::exp(0, -1), GroupScalar::exp(0)}));
  CHECK(kernel_membership({GroupScalar::exp(1), GroupScalar::exp(-1)}));
  CHECK_FALSE(kernel_membership({GroupScalar::exp(1), GroupScalar::exp(0)}));
  CHECK(kernel_membership({q(2), q(-1, 2)}));
}

TEST_CASE("invariant evaluation") {
  const auto xi = exp_invariant(4, 1, 2, {{"p2", Rational(1, 3)}});
  CHECK(evaluate(xi, 3, 1, {{"p2", 3}}) == GroupScalar::exp(6));
  CHECK(error_kind([&] { evaluate(xi, 3, 1); }) == ErrorKind::MissingAttribute);
  const SKKInvariant rational{2, q(2), q(1), {}};
  CHECK(error_kind([&] { evaluate(rational, 1, 0); }) == ErrorKind::FractionalExponent);
  const SKKInvariant square{2, q(4), q(1), {}};
  CHECK(evaluate(square, 1, 0) == q(2));
  CHECK(evaluate(exp_invariant(4, 0, 1), fx::cp2_9()) == GroupScalar::exp(1));
}

TEST_CASE("splitting") {
  const auto xi = exp_invariant(2, 1);
  const Splitting s(xi, virtual_bordism::catalogs::dim2());
  CHECK(s.tqft() == InvertibleTQFT2{GroupScalar::exp(1), GroupScalar::exp(1)});
  CHECK(tqft::evaluate(s.tqft(), cobordism::parse_word("cap ; cup")) == GroupScalar::exp(2));
  const auto handle = virtual_bordism::make_piece(2, -2, 0, {{"S1", 0, 1}, {"S1", 0, 1}}, "copants;pants");
  CHECK(s.evaluate(handle, 1) == GroupScalar::exp(-2));

  const Splitting sigma(exp_invariant(4, 0, 1), virtual_bordism::catalogs::dim4());
  CHECK(sigma.evaluate(virtual_bordism::catalogs::dim4().piece("D4"), 0) == GroupScalar::exp(0));
  CHECK(sigma.evaluate(virtual_bordism::catalogs::dim4().piece("CP2"), 0) == GroupScalar::exp(1));
  CHECK(error_kind([] { Splitting(exp_invariant(4, 0, 1)).evaluate(virtual_bordism::catalogs::dim4().piece("D4"), 0); }) ==
        ErrorKind::MissingBSigma);

  CHECK(Splitting(exp_invariant(2, 0)).tqft() == InvertibleTQFT2::trivial(GroupScalar::Variant::SignedExp));
  CHECK(error_kind([] { Splitting(exp_invariant(6, 1)); }) == ErrorKind::UnsupportedDimension);
  CHECK(error_kind([] { Splitting(SKKInvariant{2, q(2), q(1), {}}); }) == ErrorKind::VariantMismatch);
}

TEST_CASE("split exact sequence") {
  const auto axis = grid_axis(9);
  REQUIRE(axis.size() == 9);
  CHECK(axis[4] == GroupScalar::exp(0));
  CHECK(axis[0] == GroupScalar::exp(-2));
  CHECK(axis[1] == GroupScalar::exp(Rational(-3, 2), -1));

  const auto report = verify_split_sequence(9, 3);
  REQUIRE(report.checks.size() == 4);
  for (const auto& c : report.checks) {
    INFO(c.name);
    CHECK(c.ok());
    CHECK(c.instances > 0);
  }
  const auto bad = verify_split_sequence(9, 3, mismatched_splitting());
  CHECK_FALSE(bad.checks[2].ok());
  CHECK_FALSE(bad.checks[2].witnesses.empty());
}

TEST_CASE("capping-choice dependence") {
  const auto catalog = virtual_bordism::catalogs::dim8_demo();
  const auto [first, second] = b_sigma_dependence_demo(catalog);
  CHECK(first == GroupScalar::exp(0));
  CHECK(second == GroupScalar::exp(10));
  const auto xi = exp_invariant(8, 0, 0, {{"p2", 1}});
  CHECK(evaluate(xi, catalog.piece("S8")) == GroupScalar::exp(0));
  CHECK(evaluate(xi, catalog.piece("CP4")) == GroupScalar::exp(10));
}

TEST_CASE("bordism projection") {
  CHECK(bordism_projection(fx::cp2_9()) == 1);
  CHECK(bordism_projection(fx::sphere(4)) == 0);
  CHECK(bordism_projection(simplicial::disjoint_union(fx::cp2_9(), fx::cp2_9().reversed())) == 0);
  CHECK(error_kind([] { bordism_projection(fx::torus7()); }) == ErrorKind::UnsupportedDimension);
}
