#pragma once

#include <optional>
#include <vector>

#include "qpade/rational.hpp"

namespace qpade {

/// Truncated Laurent series in a small parameter eps with exact coefficients:
/// eps^val * (c[0] + c[1] eps + ...), known for exponents below `prec`.
/// Exact constants carry an effectively unbounded precision.
class Laurent {
 public:
  static constexpr int kExact = 1 << 20;
  static constexpr int kWorkingTerms = 16;

  Laurent() : Laurent(Rational(0)) {}
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)
  Laurent(int c) : Laurent(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  /// c * eps^k
  static Laurent monomial(const Rational& c, int k);
  static Laurent eps() { return monomial(Rational(1), 1); }

  /// Exponent of the leading known nonzero term; nullopt when no nonzero term is known.
  std::optional<int> valuation() const;
  int precision() const { return prec_; }
  Rational leading() const;

  struct Limit {
    bool infinite = false;
    Rational value;
    friend bool operator==(const Limit&, const Limit&) = default;
  };
  /// Value at eps -> 0 on the projective line; throws CertificationFailed if not determined.
  Limit limit() const;

  Laurent inverse() const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inverse(); }
  friend Laurent operator-(const Laurent& a);

 private:
  void normalize();
  int val_ = 0;
  std::vector<Rational> c_;  // empty means no nonzero coefficient below prec_
  int prec_ = kExact;
};

}  // namespace qpade
