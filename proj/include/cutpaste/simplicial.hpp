#pragma once

#include "cutpaste/exact_linalg.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cutpaste::simplicial {

using Vertex = std::uint64_t;
using Simplex = std::vector<Vertex>;

/// Pure simplicial complex given by its facets, with an optional sign per
/// facet. Facets are stored sorted ascending and the facet list is sorted,
/// so equality of complexes is equality of these lists. Sorting a facet
/// given with an orientation folds the permutation parity into its sign.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int dim, std::vector<Simplex> facets,
                    std::optional<std::vector<int>> orientations = std::nullopt);

  int dim() const noexcept { return dim_; }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  const std::optional<std::vector<int>>& orientations() const noexcept { return orientations_; }
  bool empty() const noexcept { return facets_.empty(); }
  bool is_oriented() const noexcept { return orientations_.has_value(); }

  std::vector<Vertex> vertices() const;
  // All k-faces of the closure, sorted lexicographically.
  std::vector<Simplex> faces(int k) const;
  // Matrix of d_k : C_k -> C_{k-1} in the bases faces(k), faces(k-1).
  IntMatrix boundary_matrix(int k) const;

  SimplicialComplex with_orientations(std::vector<int> signs) const;
  // Negates every facet sign; orients first if needed.
  SimplicialComplex reversed() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int dim_ = 0;
  std::vector<Simplex> facets_;
  std::optional<std::vector<int>> orientations_;
};

enum class Coefficients { Integers, Rationals, Mod2 };

struct HomologyProfile {
  std::vector<std::size_t> betti;
  std::vector<std::vector<Integer>> torsion;  // elementary divisors > 1, per degree
};

/// Kervaire semicharacteristic: chi/2 for even dimension, sum of rational
/// ranks of even-degree homology mod 2 for odd dimension.
struct Semicharacteristic {
  bool mod2 = false;
  Integer value;
  friend bool operator==(const Semicharacteristic&, const Semicharacteristic&) = default;
};

bool validate_closed(const SimplicialComplex& k);
// Sign assignment with vanishing signed boundary. Throws NotClosed / NotOrientable.
SimplicialComplex orient(const SimplicialComplex& k);
// True when the stored signs make the signed boundary of the facet chain vanish.
bool orientation_is_cycle(const SimplicialComplex& k);
// Returns k if its stored signs form a cycle, orient(k) if it has none;
// throws NotOrientable for stored signs that do not form a cycle.
SimplicialComplex ensure_oriented(const SimplicialComplex& k);

Integer euler_characteristic(const SimplicialComplex& k);
HomologyProfile homology(const SimplicialComplex& k, Coefficients coefficients = Coefficients::Integers);
Semicharacteristic kervaire_semicharacteristic(const SimplicialComplex& k);

// Relabels the second complex above the first; the empty complex is a unit.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
// Removes one facet from each (the first) and identifies their vertices.
SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex complex_from_json(const nlohmann::json& doc);
nlohmann::json complex_to_json(const SimplicialComplex& k);
SimplicialComplex load_complex(const std::string& path);

namespace fixtures {

// Boundary of the (n+1)-simplex, an n-sphere on n+2 vertices.
SimplicialComplex sphere(int n);
SimplicialComplex torus7();
SimplicialComplex projective_plane6();
// Kuhnel's 9-vertex complex projective plane, signs chosen so that the
// signature is +1.
SimplicialComplex cp2_9();
// Closed orientable surface of genus g: sphere for g = 0, iterated
// connected sums of the 7-vertex torus otherwise.
SimplicialComplex closed_surface(int genus);

}  // namespace fixtures

}  // namespace cutpaste::simplicial
