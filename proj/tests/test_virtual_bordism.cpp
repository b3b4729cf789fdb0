#include "catch_amalgamated.hpp"

#include "cutpaste/surfaces.hpp"
#include "cutpaste/virtual_bordism.hpp"
#include "support.hpp"

using namespace cutpaste;
using namespace cutpaste::virtual_bordism;
using testing::error_kind;

namespace {

BoundaryLabel s1() { return {"S1", 0, 1}; }

}  // namespace

TEST_CASE("gluing pieces") {
  const auto d2 = catalogs::dim2();
  const auto sphere = glue(d2.piece("disk"), d2.piece("disk"), {{0, 0}});
  CHECK(sphere.closed());
  CHECK(sphere.chi == 2);

  const auto d4 = catalogs::dim4();
  const auto s4 = glue(d4.piece("D4"), d4.piece("D4"), {{0, 0}});
  CHECK(s4.chi == 2);
  CHECK(s4.sigma == 0);

  const auto d8 = catalogs::dim8_demo();
  const auto cp4 = d8.resolve(glue(d8.piece("D8"), reverse(d8.piece("CP4-D8")), {{0, 0}}));
  CHECK(cp4 == d8.piece("CP4"));
  CHECK(cp4.attributes.at("p2") == 10);
}

TEST_CASE("gluing errors") {
  const auto disk = catalogs::dim2().piece("disk");
  const auto d4 = catalogs::dim4().piece("D4");
  const auto odd = make_piece(2, 1, 0, {{"T1", 0, 1}}, "odd");
  CHECK(error_kind([&] { glue(disk, d4, {{0, 0}}); }) == ErrorKind::DimensionMismatch);
  CHECK(error_kind([&] { glue(disk, odd, {{0, 0}}); }) == ErrorKind::LabelMismatch);
  CHECK(error_kind([&] { glue(disk, disk, {{0, 1}}); }) == ErrorKind::InvalidMatching);
  CHECK(error_kind([&] { glue(disk, disk, {{0, 0}, {0, 0}}); }) == ErrorKind::InvalidMatching);
  CHECK(error_kind([] { make_piece(2, 1, 1, {}, "bad"); }) == ErrorKind::InvalidSpec);
  CHECK(error_kind([] { make_piece(4, 1, 0, {{"S3", 2, 1}}, "bad"); }) == ErrorKind::InvalidSpec);
  CHECK(error_kind([] { make_piece(4, 1, 0, {{"S3", 0, 2}}, "bad"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("unions and the empty piece") {
  const auto d4 = catalogs::dim4();
  const auto cp2 = d4.piece("CP2");
  const auto both = disjoint_union(cp2, reverse(cp2));
  CHECK(both.chi == 6);
  CHECK(both.sigma == 0);
  CHECK(glue(empty_piece(4), cp2, {}) == cp2);
  CHECK(disjoint_union(cp2, empty_piece(4)) == cp2);
}

TEST_CASE("reversal") {
  const auto cp2 = catalogs::dim4().piece("CP2");
  const auto r = reverse(cp2);
  CHECK(r.chi == 3);
  CHECK(r.sigma == -1);
  CHECK(r.recipe == "rev(CP2)");
  CHECK(reverse(r) == cp2);
  const auto d8 = catalogs::dim8_demo().piece("CP4");
  CHECK(reverse(d8).attributes.at("p2") == -10);
  const auto disk = catalogs::dim2().piece("disk");
  CHECK(reverse(disk).boundary.front().orientation == -1);
}

TEST_CASE("doubles") {
  const auto d4 = catalogs::dim4();
  const auto s4 = double_piece(d4.piece("D4"));
  CHECK(s4.chi == 2);
  CHECK(s4.sigma == 0);
  CHECK(double_piece(d4.piece("CP2-D4")).sigma == 0);
  const auto closed = double_piece(d4.piece("CP2"));
  CHECK(closed.chi == 6);
  CHECK(closed.sigma == 0);
  const auto pants = catalogs::dim2().piece("pants");
  CHECK(double_piece(pants).chi == -2);
  CHECK(double_piece(pants).chi == surfaces::chi(surfaces::double_surface(surfaces::Surface({{0, 3}}))));
}

TEST_CASE("pieces from surfaces") {
  const auto p = from_surface(surfaces::SurfaceComponent{1, 2});
  CHECK(p.dim == 2);
  CHECK(p.chi == -2);
  CHECK(p.boundary == std::vector<BoundaryLabel>(2, s1()));
  CHECK(from_surface(surfaces::Surface({{0, 0}, {1, 1}})).chi == 1);
}

TEST_CASE("closing up") {
  const auto d2 = catalogs::dim2();
  const auto tube = make_piece(2, -2, 0, {s1(), s1()}, "copants;pants");
  CHECK(close_up(tube, 1, d2).chi == 0);

  const auto d8 = catalogs::dim8_demo();
  const auto disk = d8.piece("D8");
  const auto closed = close_up(disk, 0, d8);
  CHECK(closed.recipe == "S8");
  CHECK(closed == d8.piece("S8"));
  const auto other = close_up(disk, 0, d8.with_b_sigma("S7", "CP4-D8"));
  CHECK(other == d8.piece("CP4"));

  const auto d4 = catalogs::dim4();
  CHECK(close_up(d4.piece("D4"), 0, d4).sigma == 0);
  CHECK(error_kind([&] { d4.with_b_sigma("S3", "CP2"); }) == ErrorKind::InvalidSpec);
  const auto no_b = Catalog(4, 1, d4.pieces(), {}, d4.identities());
  CHECK(error_kind([&] { close_up(d4.piece("D4"), 0, no_b); }) == ErrorKind::MissingBSigma);
}

TEST_CASE("gluing relation") {
  Rng rng(derive_seed(51, 0));
  for (int dim : {2, 4}) {
    for (int i = 0; i < 200; ++i) {
      const auto x = random_triple(rng, dim);
      CHECK(lemma_relation_check(x[0], x[1], x[2], Invariant::Chi));
      CHECK(lemma_relation_check(x[0], x[1], x[2], Invariant::Sigma));
    }
  }
  const auto d2 = catalogs::dim2();
  const auto pants = d2.piece("pants");
  const auto three = make_piece(2, 1, 0, {s1(), s1(), s1()}, "three");
  const auto [lhs, rhs] = lemma_relation_sides(pants, three, pants, Invariant::Chi);
  CHECK(lhs == rhs);
  const auto cp = catalogs::dim4().piece("CP2");
  CHECK(lemma_relation_check(cp, empty_piece(4), reverse(cp), Invariant::Sigma));
  CHECK(error_kind([&] { lemma_relation_sides(pants, d2.piece("disk"), pants, Invariant::Chi); }) == ErrorKind::LabelMismatch);
}

TEST_CASE("shipped catalog files match the built-in catalogs") {
  CHECK(load_catalog(testing::source_path("catalogs/dim2.json")) == catalogs::dim2());
  CHECK(load_catalog(testing::source_path("catalogs/dim4.json")) == catalogs::dim4());
  CHECK(load_catalog(testing::source_path("catalogs/dim8.json")) == catalogs::dim8_demo());
  for (const auto& c : {catalogs::dim2(), catalogs::dim4(), catalogs::dim8_demo()}) CHECK(catalog_from_json(catalog_to_json(c)) == c);
}

TEST_CASE("catalog JSON rejection") {
  auto doc = catalog_to_json(catalogs::dim4());
  doc["colour"] = "blue";
  CHECK(error_kind([&] { catalog_from_json(doc); }) == ErrorKind::FormatError);
  auto missing = catalog_to_json(catalogs::dim4());
  missing.erase("pieces");
  CHECK(error_kind([&] { catalog_from_json(missing); }) == ErrorKind::FormatError);
  auto wrong_b = catalog_to_json(catalogs::dim4());
  wrong_b["b_sigma"]["S3"] = "CP2";
  CHECK(error_kind([&] { catalog_from_json(wrong_b); }) == ErrorKind::InvalidSpec);
  CHECK(error_kind([] { load_catalog("/nonexistent/catalog.json"); }) == ErrorKind::FormatError);
}
