#include "catch_amalgamated.hpp"

#include "cutpaste/simplicial.hpp"
#include "support.hpp"

#include <fstream>

using namespace cutpaste;
using namespace cutpaste::simplicial;
using testing::error_kind;

namespace {

using Betti = std::vector<std::size_t>;

// Rank over Q by plain Gaussian elimination on rationals.
std::size_t rank_oracle(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(a(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && m[pivot][col] == 0) ++pivot;
    if (pivot == a.rows()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < a.cols(); ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// b_k = dim C_k - rank d_k - rank d_{k+1}.
Betti betti_oracle(const SimplicialComplex& k) {
  Betti b;
  for (int d = 0; d <= k.dim(); ++d) {
    const std::size_t chains = k.faces(d).size();
    const std::size_t out = d == 0 ? 0 : rank_oracle(k.boundary_matrix(d));
    const std::size_t in = d == k.dim() ? 0 : rank_oracle(k.boundary_matrix(d + 1));
    b.push_back(chains - out - in);
  }
  return b;
}

SimplicialComplex triangle_circle() { return SimplicialComplex(1, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("closedness") {
  CHECK(validate_closed(fixtures::sphere(2)));
  CHECK_FALSE(validate_closed(SimplicialComplex(2, {{0, 1, 2}})));
  const auto t = fixtures::torus7();
  CHECK(t.faces(0).size() == 7);
  CHECK(t.faces(1).size() == 21);
  CHECK(t.faces(2).size() == 14);
  CHECK(validate_closed(t));
}

TEST_CASE("orientation") {
  CHECK(orientation_is_cycle(orient(fixtures::sphere(2))));
  CHECK(orientation_is_cycle(orient(fixtures::torus7())));
  CHECK(orientation_is_cycle(orient(fixtures::cp2_9())));
  CHECK(error_kind([] { orient(fixtures::projective_plane6()); }) == ErrorKind::NotOrientable);
  CHECK(error_kind([] { orient(SimplicialComplex(2, {{0, 1, 2}})); }) == ErrorKind::NotClosed);
}

TEST_CASE("boundary of a boundary vanishes") {
  for (const auto& k : {fixtures::sphere(3), fixtures::torus7(), fixtures::cp2_9(), fixtures::projective_plane6()}) {
    for (int d = 2; d <= k.dim(); ++d) {
      const IntMatrix dd = k.boundary_matrix(d - 1) * k.boundary_matrix(d);
      CHECK(dd == IntMatrix(dd.rows(), dd.cols()));
    }
  }
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(fixtures::sphere(2)) == 2);
  CHECK(euler_characteristic(fixtures::torus7()) == 0);
  CHECK(euler_characteristic(disjoint_union(fixtures::sphere(2), fixtures::sphere(2))) == 4);
  CHECK(euler_characteristic(fixtures::cp2_9()) == 3);
  CHECK(euler_characteristic(fixtures::sphere(4)) == 2);
}

TEST_CASE("integral homology of the fixtures") {
  const auto s2 = homology(fixtures::sphere(2));
  CHECK(s2.betti == Betti{1, 0, 1});
  for (const auto& t : s2.torsion) CHECK(t.empty());
  CHECK(homology(fixtures::torus7()).betti == Betti{1, 2, 1});
  CHECK(homology(fixtures::sphere(3)).betti == Betti{1, 0, 0, 1});
  CHECK(homology(fixtures::cp2_9()).betti == Betti{1, 0, 1, 0, 1});

  const auto rp2 = homology(fixtures::projective_plane6());
  CHECK(rp2.betti == Betti{1, 0, 0});
  CHECK(rp2.torsion[1] == std::vector<Integer>{2});
  CHECK(homology(fixtures::projective_plane6(), Coefficients::Mod2).betti == Betti{1, 1, 1});
  CHECK(homology(fixtures::projective_plane6(), Coefficients::Rationals).betti == Betti{1, 0, 0});
}

TEST_CASE("homology agrees with rational elimination") {
  for (const auto& k : {fixtures::sphere(2), fixtures::sphere(3), fixtures::torus7(), fixtures::projective_plane6(),
                        fixtures::cp2_9(), fixtures::closed_surface(2), triangle_circle()}) {
    CHECK(homology(k, Coefficients::Rationals).betti == betti_oracle(k));
    CHECK(homology(k).betti == betti_oracle(k));
  }
}

TEST_CASE("closed surfaces of higher genus") {
  for (int g = 0; g <= 3; ++g) {
    const auto k = fixtures::closed_surface(g);
    CHECK(validate_closed(k));
    CHECK(homology(k).betti == Betti{1, static_cast<std::size_t>(2 * g), 1});
    CHECK(euler_characteristic(k) == 2 - 2 * g);
  }
  const auto sum = connected_sum(fixtures::torus7(), fixtures::torus7());
  CHECK(euler_characteristic(sum) == euler_characteristic(fixtures::torus7()) * 2 - 2);
}

TEST_CASE("semicharacteristic") {
  CHECK(kervaire_semicharacteristic(fixtures::sphere(2)) == Semicharacteristic{false, 1});
  CHECK(kervaire_semicharacteristic(triangle_circle()) == Semicharacteristic{true, 1});
  CHECK(kervaire_semicharacteristic(fixtures::sphere(3)) == Semicharacteristic{true, 1});
  CHECK(kervaire_semicharacteristic(fixtures::torus7()) == Semicharacteristic{false, 0});
  CHECK(kervaire_semicharacteristic(disjoint_union(triangle_circle(), triangle_circle())) == Semicharacteristic{true, 0});
}

TEST_CASE("disjoint union") {
  CHECK(homology(disjoint_union(fixtures::sphere(2), fixtures::torus7())).betti == Betti{2, 2, 2});
  const auto k = fixtures::torus7();
  CHECK(disjoint_union(k, SimplicialComplex()) == k);
  CHECK(disjoint_union(SimplicialComplex(), k) == k);
  CHECK(error_kind([] { disjoint_union(fixtures::sphere(2), fixtures::sphere(3)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("shipped fixture files match the built-in complexes") {
  CHECK(load_complex(testing::source_path("fixtures/sphere2.json")) == fixtures::sphere(2));
  CHECK(load_complex(testing::source_path("fixtures/sphere3.json")) == fixtures::sphere(3));
  CHECK(load_complex(testing::source_path("fixtures/sphere4.json")) == fixtures::sphere(4));
  CHECK(load_complex(testing::source_path("fixtures/torus7.json")) == fixtures::torus7());
  CHECK(load_complex(testing::source_path("fixtures/rp2_6.json")) == fixtures::projective_plane6());
  CHECK(load_complex(testing::source_path("fixtures/cp2_9.json")) == fixtures::cp2_9());
}

TEST_CASE("complex JSON round trip and rejection") {
  const auto k = orient(fixtures::torus7());
  CHECK(complex_from_json(complex_to_json(k)) == k);
  CHECK(error_kind([] { complex_from_json(nlohmann::json{{"dim", 2}}); }) == ErrorKind::FormatError);
  CHECK(error_kind([] { complex_from_json(nlohmann::json{{"dim", 2}, {"facets", {{0, 1}}}}); }) == ErrorKind::FormatError);
  CHECK(error_kind([] { load_complex("/nonexistent/complex.json"); }) == ErrorKind::FormatError);

  const std::string path = "bad_complex.json";
  std::ofstream(path) << "{\"dim\": 2, \"facets\": [[0, 1, 2]";
  const std::string msg = testing::error_message([&] { load_complex(path); });
  CHECK(msg.find("bad_complex.json") != std::string::npos);
}
