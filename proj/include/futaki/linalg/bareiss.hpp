#pragma once

// Fraction-free Gaussian elimination (Bareiss) over an integral domain with
// exact division: rationals, or polynomials in c.

#include <cstddef>
#include <utility>
#include <vector>

#include "futaki/errors.hpp"
#include "futaki/exactnum/poly.hpp"

namespace futaki::linalg {

inline bool ring_is_zero(const num::BigRational& a) { return a.is_zero(); }
inline bool ring_is_zero(const num::Poly& a) { return a.is_zero(); }
inline num::BigRational ring_div(const num::BigRational& a, const num::BigRational& b) { return a / b; }
inline num::Poly ring_div(const num::Poly& a, const num::Poly& b) { return num::exact_div(a, b); }

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// x = numerators / det, with det the determinant of the row-permuted matrix.
template <class R>
struct BareissSolution {
  std::vector<R> numerators;
  R det;
};

template <class R>
BareissSolution<R> bareiss_solve(Matrix<R> m, std::vector<R> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw SingularSystem("right-hand side size does not match the matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw SingularSystem("matrix is not square");
    m[i].push_back(std::move(rhs[i]));
  }
  if (n == 0) return {{}, R(1)};
  R prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (ring_is_zero(m[k][k])) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && ring_is_zero(m[swap_with][k])) ++swap_with;
      if (swap_with == n) throw SingularSystem("singular linear system");
      std::swap(m[k], m[swap_with]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        m[i][j] = ring_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = R();
    }
    prev = m[k][k];
  }
  const R det = m[n - 1][n - 1];
  std::vector<R> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    R acc = det * m[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc = acc - m[ii][j] * x[j];
    x[ii] = ring_div(acc, m[ii][ii]);
  }
  return {std::move(x), det};
}

/// Determinant by the same elimination (sign-corrected for row swaps).
template <class R>
R bareiss_det(Matrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (ring_is_zero(m[k][k])) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && ring_is_zero(m[swap_with][k])) ++swap_with;
      if (swap_with == n) return R();
      std::swap(m[k], m[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = ring_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = R();
    }
    prev = m[k][k];
  }
  return negate ? R() - m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace futaki::linalg
