#include "catch_amalgamated.hpp"

#include "cutpaste/error.hpp"
#include "cutpaste/exact_linalg.hpp"
#include "cutpaste/random.hpp"
#include "support.hpp"

#include <numeric>

using namespace cutpaste;

namespace {

// Cofactor expansion, used as an oracle independent of the elimination code.
Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    total += (j % 2 == 0 ? 1 : -1) * m(0, j) * cofactor_det(minor);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of all k x k
// minors, factor_k = d_k / d_{k-1}.
std::vector<Integer> snf_oracle(const IntMatrix& a) {
  std::vector<Integer> factors;
  Integer previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rows);
    subsets(a.cols(), k, 0, cur, cols);
    Integer g = 0;
    for (const auto& r : rows)
      for (const auto& c : cols) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
        g = gcd(g, abs(cofactor_det(m)));
      }
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform_int(rng, -bound, bound);
  return m;
}

IntMatrix rows(std::vector<std::vector<Integer>> r) { return IntMatrix::from_rows(r); }

}  // namespace

TEST_CASE("smith normal form on fixed inputs") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).diag == std::vector<Integer>{1, 1});
  CHECK(smith_normal_form(IntMatrix(2, 2)).diag.empty());
  CHECK(smith_normal_form(rows({{2, 4}, {6, 8}})).diag == std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(rows({{2, 0}, {0, 3}})).diag == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form(IntMatrix(0, 3)).diag.empty());
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  Rng rng(derive_seed(11, 0));
  for (int t = 0; t < 150; ++t) {
    const auto r = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const auto c = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const IntMatrix a = random_matrix(rng, r, c, t % 3 == 0 ? 2 : 12);
    const SNFResult snf = smith_normal_form(a);
    INFO(to_string(a));
    CHECK(snf.diag == snf_oracle(a));
    CHECK(snf.left * a * snf.right == snf.diagonal_matrix(r, c));
    CHECK(abs(cofactor_det(snf.left)) == 1);
    CHECK(abs(cofactor_det(snf.right)) == 1);
  }
}

TEST_CASE("ranks") {
  CHECK(rational_rank(IntMatrix::identity(3)) == 3);
  CHECK(rational_rank(rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rational_rank(IntMatrix(3, 2)) == 0);
  CHECK(rank_mod2(rows({{2, 0}, {0, 1}})) == 1);

  Rng rng(derive_seed(11, 1));
  for (int t = 0; t < 150; ++t) {
    const IntMatrix a = random_matrix(rng, static_cast<std::size_t>(uniform_int(rng, 1, 5)),
                                      static_cast<std::size_t>(uniform_int(rng, 1, 5)), 3);
    const auto factors = snf_oracle(a);
    INFO(to_string(a));
    CHECK(rational_rank(a) == factors.size());
    CHECK(rational_rank(a.transpose()) == factors.size());
    const auto odd = std::count_if(factors.begin(), factors.end(), [](const Integer& d) { return d % 2 != 0; });
    CHECK(rank_mod2(a) == static_cast<std::size_t>(odd));
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  Rng rng(derive_seed(11, 2));
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const IntMatrix a = random_matrix(rng, n, n, 9);
    CHECK(determinant(a) == cofactor_det(a));
  }
}

TEST_CASE("signature of symmetric forms") {
  CHECK(symmetric_signature(to_rational(rows({{1, 0}, {0, -1}}))) == SignatureTriple{1, 1, 0});
  CHECK(symmetric_signature(to_rational(rows({{0, 1}, {1, 0}}))) == SignatureTriple{1, 1, 0});
  CHECK(symmetric_signature(to_rational(rows({{2}}))) == SignatureTriple{1, 0, 0});
  CHECK(symmetric_signature(to_rational(rows({{1, 1}, {1, 1}}))) == SignatureTriple{1, 0, 1});
  CHECK(symmetric_signature(RatMatrix(0, 0)) == SignatureTriple{0, 0, 0});
  CHECK(testing::error_kind([] { symmetric_signature(to_rational(rows({{0, 1}, {2, 0}}))); }) == ErrorKind::NonSymmetric);
}

TEST_CASE("signature agrees with leading principal minors") {
  // Jacobi: with all leading minors nonzero, the number of negative
  // eigenvalues is the number of sign changes in 1, D1, ..., Dn.
  Rng rng(derive_seed(11, 3));
  int compared = 0;
  while (compared < 100) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    IntMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) q(i, j) = q(j, i) = uniform_int(rng, -4, 4);
    std::vector<Integer> minors{1};
    for (std::size_t k = 1; k <= n; ++k) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = q(i, j);
      minors.push_back(cofactor_det(m));
    }
    if (std::find(minors.begin(), minors.end(), Integer(0)) != minors.end()) continue;
    std::size_t changes = 0;
    for (std::size_t k = 1; k < minors.size(); ++k) changes += (minors[k] > 0) != (minors[k - 1] > 0);
    CHECK(symmetric_signature(to_rational(q)) == SignatureTriple{n - changes, changes, 0});
    ++compared;
  }
}
