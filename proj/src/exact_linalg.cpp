#include "cutpaste/exact_linalg.hpp"

#include "cutpaste/error.hpp"

#include <optional>
#include <sstream>
#include <utility>

namespace cutpaste {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block [t.., t..]; row-major scan keeps the
// lowest index on ties.
std::optional<Position> find_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Integer& v = d(i, j);
      if (v == 0) continue;
      Integer a = abs(v);
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

std::optional<Position> find_non_multiple(const IntMatrix& d, std::size_t t) {
  const Integer& p = d(t, t);
  for (std::size_t i = t + 1; i < d.rows(); ++i)
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (d(i, j) % p != 0) return Position{i, j};
  return std::nullopt;
}

}  // namespace

IntMatrix SNFResult::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

SNFResult smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  std::vector<Integer> diag;

  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      auto pivot = find_pivot(d, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;  // a smaller remainder now exists; re-pivot

      if (auto bad = find_non_multiple(d, t)) {
        d.add_row_multiple(t, bad->row, Integer(1));
        u.add_row_multiple(t, bad->row, Integer(1));
        continue;
      }
      break;
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    diag.push_back(d(t, t));
  }
  return SNFResult{std::move(diag), std::move(u), std::move(v)};
}

std::size_t rational_rank(const IntMatrix& a) {
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pr = rank;
    while (pr < m.rows() && m(pr, col) == 0) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(rank, pr);
    const Integer pivot = m(rank, col);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m(i, j) = (m(i, j) * pivot - m(i, col) * m(rank, j)) / prev;
      m(i, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rank_mod2(const IntMatrix& a) {
  std::vector<std::vector<bool>> m(a.rows(), std::vector<bool>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = (a(i, j) % 2) != 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pr = rank;
    while (pr < a.rows() && !m[pr][col]) ++pr;
    if (pr == a.rows()) continue;
    std::swap(m[rank], m[pr]);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || !m[i][col]) continue;
      for (std::size_t j = col; j < a.cols(); ++j) m[i][j] = m[i][j] != m[rank][j];
    }
    ++rank;
  }
  return rank;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pr = k + 1;
      while (pr < n && m(pr, k) == 0) ++pr;
      if (pr == n) return 0;
      m.swap_rows(k, pr);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SignatureTriple symmetric_signature(const RatMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::NonSymmetric, "matrix is not square");
  const std::size_t n = input.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (input(i, j) != input(j, i))
        throw Error(ErrorKind::NonSymmetric, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");

  RatMatrix q = input;
  SignatureTriple out;
  for (std::size_t k = 0; k < n; ++k) {
    if (q(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && q(j, j) == 0) ++j;
      if (j < n) {
        q.swap_rows(k, j);
        q.swap_cols(k, j);
      } else {
        j = k + 1;
        while (j < n && q(k, j) == 0) ++j;
        if (j == n) {
          ++out.n_zero;
          continue;
        }
        // q(j,j) == 0 here, so the new pivot is 2 q(k,j) != 0.
        q.add_row_multiple(k, j, Rational(1));
        q.add_col_multiple(k, j, Rational(1));
      }
    }
    const Rational pivot = q(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (q(i, k) == 0) continue;
      const Rational f = q(i, k) / pivot;
      q.add_row_multiple(i, k, Rational(-f));
      q.add_col_multiple(i, k, Rational(-f));
    }
    if (pivot > 0)
      ++out.n_plus;
    else
      ++out.n_minus;
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace cutpaste
