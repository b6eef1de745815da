#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpade/params.hpp"
#include "qpade/series.hpp"

namespace qpade {

/// Weakly decreasing list of non-negative integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// (m^n)
  static Partition rectangle(int m, int n) { return Partition(std::vector<int>(n, m)); }
  /// (m^n, i), i <= m
  static Partition rectangle_plus_row(int m, int n, int i);
  /// ((m+1)^i, m^{n-i})
  static Partition stacked(int m, int n, int i);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }

 private:
  std::vector<int> parts_;
};

/// det(p_{seq_i - i + j}) for an arbitrary integer sequence (p_k = 0 for k < 0).
/// Throws InsufficientCoefficients when an index exceeds p.size() - 1.
Rational jacobi_trudi(std::span<const int> seq, std::span<const Rational> p);
inline Rational schur(const Partition& lambda, std::span<const Rational> p) { return jacobi_trudi(lambda.parts(), p); }

/// tau_{m,n} = s_{(m^n)} of the generating coefficients.
Rational tau(const GeneratingParams& g, int m, int n);

struct PadePair {
  Poly P;
  Poly Q;
  int m = 0;
  int n = 0;
  GeneratingParams params;

  PadePair scaled(const Rational& c) const { return {P.scaled(c), Q.scaled(c), m, n, params}; }
};

/// Schur-function construction; Q(0) = s_{(m^n)} fixes the normalization.
PadePair build_PQ(const GeneratingParams& g, int m, int n);
/// Single-determinant construction with polynomial-valued entries.
PadePair build_PQ_single_det(const GeneratingParams& g, int m, int n);
/// Kernel of the m+n+1 linear conditions on the m+n+2 coefficients; independent of the Schur route.
PadePair pade_linear_solve(const GeneratingParams& g, int m, int n);

/// c with a = c * b (both P and Q), if such a nonzero scalar exists.
std::optional<Rational> proportionality(const PadePair& a, const PadePair& b);

struct PadeReport {
  std::optional<int> first_nonzero;  ///< first nonzero coefficient of Y*Q - P within `checked_order`
  int required = 0;                   ///< m + n + 1
  int checked_order = 0;
  bool ok = false;
  std::string str() const;
};

/// Residual order of Y*Q - P, checked through x^{m+n+1+slack}.
PadeReport verify_pade(const PadePair& pair, int slack = 3);

}  // namespace qpade
