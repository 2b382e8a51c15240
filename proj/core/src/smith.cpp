#include "normtori/smith.hpp"

#include <cstdlib>
#include <utility>

#include "normtori/errors.hpp"

namespace normtori {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow in Smith normal form");
  return r;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_a <- row_a + k * row_b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] = checked_add(m[a][j], checked_mul(k, m[b][j]));
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, std::int64_t k) {
  if (k == 0) return;
  for (auto& row : m) row[a] = checked_add(row[a], checked_mul(k, row[b]));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (auto& x : m[a]) x = -x;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  if (a[0].size() != k) throw Error(ErrorKind::DimensionMismatch, "matrix shapes do not compose");
  IntMatrix r(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] = checked_add(r[i][j], checked_mul(a[i][t], b[t][j]));
    }
  return r;
}

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  for (const auto& r : A)
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
  IntMatrix D = A;
  SmithForm s;
  s.U = identity(rows);
  s.V = identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (D[i][j] != 0 && (pi == rows || std::llabs(D[i][j]) < std::llabs(D[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;  // remaining block is zero
      std::swap(D[t], D[pi]);
      std::swap(s.U[t], s.U[pi]);
      swap_cols(D, t, pj);
      swap_cols(s.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t q = D[i][t] / D[t][t];
        add_row(D, i, t, -q);
        add_row(s.U, i, t, -q);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t q = D[t][j] / D[t][t];
        add_col(D, j, t, -q);
        add_col(s.V, j, t, -q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D[i][j] % D[t][t] != 0) {
            add_row(D, t, i, 1);
            add_row(s.U, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D[t][t] < 0) {
      negate_row(D, t);
      negate_row(s.U, t);
    }
  }
  s.diagonal.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    s.diagonal[i] = D[i][i];
    if (D[i][i] != 0) ++s.rank;
  }
  return s;
}

}  // namespace normtori
