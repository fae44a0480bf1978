#include "braidinv/smith.hpp"

#include <cstdlib>

#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

using i64 = std::int64_t;

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("integer overflow in Smith normal form");
  return out;
}

i64 checked_sub(i64 a, i64 b) {
  i64 out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error("integer overflow in Smith normal form");
  return out;
}

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("integer overflow in Smith normal form");
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = rows ? a[0].size() : 0;
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(rows, std::vector<i64>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
    }
  return out;
}

// Fraction-free determinant; U and V stay small so __int128 is ample.
__int128 det_bareiss(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct Worker {
  IntMatrix a, u, v;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = -a[i][j];
    for (std::size_t j = 0; j < rows; ++j) u[i][j] = -u[i][j];
  }
  // row i -= q * row t
  void row_sub(std::size_t i, std::size_t t, i64 q) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
    for (std::size_t j = 0; j < rows; ++j) u[i][j] = checked_sub(u[i][j], checked_mul(q, u[t][j]));
  }
  // col j -= q * col t
  void col_sub(std::size_t j, std::size_t t, i64 q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][j] = checked_sub(a[r][j], checked_mul(q, a[r][t]));
    for (std::size_t r = 0; r < cols; ++r) v[r][j] = checked_sub(v[r][j], checked_mul(q, v[r][t]));
  }
  void add_row(std::size_t i, std::size_t t) { row_sub(t, i, -1); }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  for (const auto& row : input)
    if (row.size() != cols) throw Error("smith_normal_form: ragged matrix");

  Worker w{input, identity_matrix(rows), identity_matrix(cols), rows, cols};

  const std::size_t steps = rows < cols ? rows : cols;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the remaining submatrix becomes the pivot
      std::size_t pi = t, pj = t;
      i64 best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (w.a[i][j] != 0 && (best == 0 || std::abs(w.a[i][j]) < best)) {
            best = std::abs(w.a[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) goto done; // submatrix is zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.a[i][t] == 0) continue;
        w.row_sub(i, t, w.a[i][t] / w.a[t][t]);
        if (w.a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.a[t][j] == 0) continue;
        w.col_sub(j, t, w.a[t][j] / w.a[t][t]);
        if (w.a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the remaining submatrix for the divisibility chain
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (w.a[i][j] % w.a[t][t] != 0) {
            w.add_row(i, t);
            divides = false;
          }
      if (divides) break;
    }
    if (w.a[t][t] < 0) w.negate_row(t);
  }
done:

  SmithResult result;
  result.d = w.a;
  result.u = w.u;
  result.v = w.v;
  for (std::size_t t = 0; t < steps; ++t)
    if (w.a[t][t] != 0) result.invariant_factors.push_back(w.a[t][t]);

  // certificate: D == U A V, |det U| = |det V| = 1, divisibility chain
  if (multiply(multiply(result.u, input), result.v) != result.d)
    throw Error("smith_normal_form: transformation certificate failed");
  const __int128 du = det_bareiss(result.u), dv = det_bareiss(result.v);
  if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
    throw Error("smith_normal_form: transformation is not unimodular");
  for (std::size_t i = 0; i + 1 < result.invariant_factors.size(); ++i)
    if (result.invariant_factors[i + 1] % result.invariant_factors[i] != 0)
      throw Error("smith_normal_form: divisibility chain failed");
  return result;
}

} // namespace braidinv
