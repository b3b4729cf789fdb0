#include "cutpaste/intersection_form.hpp"

#include "cutpaste/error.hpp"

#include <map>

namespace cutpaste::intersection_form {

using simplicial::Simplex;
using simplicial::SimplicialComplex;

namespace {

// Incrementally maintained row-echelon basis over Q.
class RationalSpan {
 public:
  explicit RationalSpan(std::size_t length) : length_(length) {}

  bool insert(const std::vector<Integer>& v) {
    std::vector<Rational> r(v.begin(), v.end());
    for (const auto& [pivot, row] : rows_) {
      if (r[pivot] == 0) continue;
      const Rational f = r[pivot] / row[pivot];
      for (std::size_t j = pivot; j < length_; ++j)
        if (row[j] != 0) r[j] -= f * row[j];
    }
    for (std::size_t j = 0; j < length_; ++j)
      if (r[j] != 0) {
        rows_.emplace_back(j, std::move(r));
        return true;
      }
    return false;
  }

 private:
  std::size_t length_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

Integer cup_evaluate(const std::vector<Integer>& alpha, const std::vector<Integer>& beta,
                     const std::vector<std::pair<std::size_t, std::size_t>>& face_pairs, const std::vector<int>& signs) {
  Integer total = 0;
  for (std::size_t f = 0; f < face_pairs.size(); ++f) {
    const auto& [front, back] = face_pairs[f];
    if (alpha[front] == 0 || beta[back] == 0) continue;
    total += signs[f] * alpha[front] * beta[back];
  }
  return total;
}

}  // namespace

IntersectionMatrix intersection_matrix(const SimplicialComplex& input) {
  if (input.dim() != 4) throw Error(ErrorKind::WrongDimension, "intersection form needs a 4-dimensional complex");
  const SimplicialComplex k = simplicial::ensure_oriented(input);

  const auto triangles = k.faces(2);
  const IntMatrix coboundary2 = k.boundary_matrix(3).transpose();  // C^2 -> C^3
  const IntMatrix coboundary1 = k.boundary_matrix(2).transpose();  // C^1 -> C^2

  // Columns of V past the rank span the kernel of the coboundary.
  const SNFResult snf = smith_normal_form(coboundary2);
  std::vector<std::vector<Integer>> cocycles;
  for (std::size_t c = snf.rank(); c < snf.right.cols(); ++c) cocycles.push_back(snf.right.column(c));

  RationalSpan span(triangles.size());
  for (std::size_t c = 0; c < coboundary1.cols(); ++c) span.insert(coboundary1.column(c));
  IntersectionMatrix out;
  for (auto& z : cocycles)
    if (span.insert(z)) out.basis.push_back(std::move(z));

  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < triangles.size(); ++i) index.emplace(triangles[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> face_pairs;
  for (const auto& f : k.facets())
    face_pairs.emplace_back(index.at({f[0], f[1], f[2]}), index.at({f[2], f[3], f[4]}));
  const auto& signs = *k.orientations();

  const std::size_t n = out.basis.size();
  RatMatrix raw(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw(i, j) = Rational(cup_evaluate(out.basis[i], out.basis[j], face_pairs, signs));
  out.pairing = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.pairing(i, j) = (raw(i, j) + raw(j, i)) / 2;
  return out;
}

long signature(const SimplicialComplex& k) {
  const auto form = intersection_matrix(k);
  const auto triple = symmetric_signature(form.pairing);
  if (triple.n_zero > 0)
    throw Error(ErrorKind::DegeneratePairing, std::to_string(triple.n_zero) + " null directions in the intersection form");
  return triple.signature();
}

}  // namespace cutpaste::intersection_form
