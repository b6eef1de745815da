#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qpade/rational.hpp"

namespace qpade {

/// Dense univariate polynomial in x with exact coefficients.
/// The leading coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& c) { return Poly({c}); }
  /// 1 - a x
  static Poly one_minus(const Rational& a) { return Poly({Rational(1), -a}); }
  static Poly monomial(const Rational& c, int k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  std::span<const Rational> coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  /// p(c x)
  Poly dilate(const Rational& c) const;
  Poly scaled(const Rational& c) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Exact quotient; throws ShapeViolation when the remainder is nonzero.
  Poly divexact(const Poly& d) const;

  std::string str(const char* var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Truncated power series: coefficients of x^0..x^order are known, nothing beyond.
/// Binary operations keep the smaller order.
class TruncSeries {
 public:
  TruncSeries() = default;
  /// Pads with zeros or truncates `coeffs` to exactly order+1 entries.
  TruncSeries(std::vector<Rational> coeffs, int order);
  static TruncSeries from_poly(const Poly& p, int order);
  static TruncSeries one(int order) { return from_poly(Poly::constant(1), order); }

  int order() const { return order_; }
  const Rational& coeff(int k) const;
  std::span<const Rational> coeffs() const { return c_; }

  TruncSeries truncated(int order) const;
  /// y(c x)
  TruncSeries dilate(const Rational& c) const;
  TruncSeries scaled(const Rational& c) const;
  /// Multiplicative inverse; throws NonUnitConstantTerm when coeff(0) == 0.
  TruncSeries inverse() const;
  /// exp(y) for y with zero constant term.
  TruncSeries exp() const;
  /// Division by x^k; the first k coefficients must vanish (ShapeViolation otherwise).
  TruncSeries shift_down(int k) const;
  /// Multiplication by x^k.
  TruncSeries shift_up(int k) const;

  /// Index of the first nonzero known coefficient, if any.
  std::optional<int> first_nonzero() const;
  bool is_zero() const { return !first_nonzero().has_value(); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const Poly& p, const TruncSeries& s);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<Rational> c_;
  int order_ = -1;
};

/// Ratio of two polynomials kept unreduced; enough for operator coefficients.
struct RationalFunction {
  Poly num = Poly::constant(1);
  Poly den = Poly::constant(1);

  RationalFunction() = default;
  RationalFunction(Poly n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num(Poly::constant(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly n, Poly d);

  /// Throws PoleAtEvaluationPoint when the denominator vanishes at x.
  Rational eval(const Rational& x) const;
  /// Series to the given order; den(0) must be nonzero.
  TruncSeries series(int order) const;
  bool is_zero() const { return num.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
};

}  // namespace qpade
