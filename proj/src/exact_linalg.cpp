#include "hypersimplex/exact_linalg.hpp"

#include <limits>
#include <utility>

#include "hypersimplex/error.hpp"

namespace hypersimplex {

namespace {

// (a*b - c*d) / e with exact division, computed in 128 bits.
std::int64_t cross_div(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e) {
  const __int128 num = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
  const __int128 q = num / e;
  require(q * e == num, ErrorKind::internal_inconsistency, "inexact division in fraction-free elimination");
  require(q >= std::numeric_limits<std::int64_t>::min() && q <= std::numeric_limits<std::int64_t>::max(),
          ErrorKind::resource, "integer overflow in fraction-free elimination");
  return static_cast<std::int64_t>(q);
}

void check_rectangular(const IntMatrix& m) {
  for (const auto& row : m)
    require(row.size() == m.front().size(), ErrorKind::parameter, "ragged matrix");
}

}  // namespace

std::int64_t bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  check_rectangular(m);
  require(m.front().size() == n, ErrorKind::parameter, "determinant of a non-square matrix");
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = cross_div(m[i][j], m[k][k], m[i][k], m[k][j], prev);
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

int integer_rank(IntMatrix m) {
  if (m.empty()) return 0;
  check_rectangular(m);
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = cross_div(m[i][j], m[rank][c], m[i][c], m[rank][j], prev);
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

ScaledInverse scaled_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  require(n > 0, ErrorKind::parameter, "inverse of an empty matrix");
  check_rectangular(m);
  require(m.front().size() == n, ErrorKind::parameter, "inverse of a non-square matrix");

  IntMatrix a(n, std::vector<std::int64_t>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  std::int64_t prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    require(p < n, ErrorKind::parameter, "matrix is singular");
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const std::int64_t factor = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a[i][j] = cross_div(a[k][k], a[i][j], factor, a[k][j], prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  ScaledInverse out;
  out.denominator = prev;
  out.numerator.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.numerator[i][j] = a[i][n + j];
  return out;
}

}  // namespace hypersimplex
