#pragma once

#include "cutpaste/exact_linalg.hpp"
#include "cutpaste/simplicial.hpp"

#include <vector>

namespace cutpaste::intersection_form {

struct IntersectionMatrix {
  // Cocycle representatives of a rational basis of H^2, indexed by faces(2).
  std::vector<std::vector<Integer>> basis;
  RatMatrix pairing;
};

// Cup-product pairing <a u b, [K]> on H^2 of a closed oriented 4-complex.
// Unoriented input is oriented first. Throws WrongDimension, NotClosed,
// NotOrientable.
IntersectionMatrix intersection_matrix(const simplicial::SimplicialComplex& k);

// n_plus - n_minus of the pairing. Throws DegeneratePairing if it has a kernel.
long signature(const simplicial::SimplicialComplex& k);

}  // namespace cutpaste::intersection_form
