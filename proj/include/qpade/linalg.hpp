#pragma once

#include <utility>
#include <vector>

#include "qpade/rational.hpp"
#include "qpade/series.hpp"

namespace qpade {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline Rational ring_divexact(const Rational& a, const Rational& b) { return a / b; }
inline Poly ring_divexact(const Poly& a, const Poly& b) { return a.divexact(b); }
inline bool ring_is_zero(const Rational& a) { return a.is_zero(); }
inline bool ring_is_zero(const Poly& a) { return a.is_zero(); }
inline Rational ring_negate(const Rational& a) { return -a; }
inline Poly ring_negate(const Poly& a) { return -a; }
template <class T> T ring_one();
template <> inline Rational ring_one<Rational>() { return Rational(1); }
template <> inline Poly ring_one<Poly>() { return Poly::constant(1); }

/// Fraction-free (Bareiss) determinant over an integral domain with exact division.
/// Every intermediate entry is itself a minor of the input, so entries stay small.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return ring_one<T>();
  bool negate = false;
  T prev = ring_one<T>();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && ring_is_zero(m[r][k])) ++r;
      if (r == n) return T{};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = ring_divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? ring_negate(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Basis of the right kernel of `a` (rows x cols), via exact reduced row echelon form.
/// Each basis vector has a 1 in its free column.
std::vector<std::vector<Rational>> kernel_basis(Matrix<Rational> a, std::size_t cols);

}  // namespace qpade
