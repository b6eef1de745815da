#include "qpade/series.hpp"

#include <algorithm>
#include <sstream>

#include "qpade/error.hpp"

namespace qpade {

// ---- Poly -------------------------------------------------------------------

Poly Poly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
}

Rational Poly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::dilate(const Rational& c) const {
  std::vector<Rational> v(c_);
  Rational ck = 1;
  for (auto& a : v) {
    a *= ck;
    ck *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& c) const {
  std::vector<Rational> v(c_);
  for (auto& a : v) a *= c;
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < d.degree()) throw Error(ErrorKind::ShapeViolation, "inexact polynomial division");
  std::vector<Rational> rem(c_);
  std::vector<Rational> quo(degree() - d.degree() + 1);
  const Rational& lead = d.c_.back();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    const Rational t = rem[k + d.degree()] / lead;
    quo[k] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= t * d.c_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Rational& r) { return !r.is_zero(); })) {
    throw Error(ErrorKind::ShapeViolation, "inexact polynomial division");
  }
  return Poly(std::move(quo));
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k] << ")";
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

// ---- TruncSeries ------------------------------------------------------------

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs)), order_(order) {
  c_.resize(order + 1);
}

TruncSeries TruncSeries::from_poly(const Poly& p, int order) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  return TruncSeries(std::move(v), order);
}

const Rational& TruncSeries::coeff(int k) const {
  if (k < 0 || k > order_) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "coefficient " + std::to_string(k) + " beyond order " + std::to_string(order_));
  }
  return c_[k];
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > order_) {
    throw Error(ErrorKind::InsufficientCoefficients, "cannot extend a series of order " + std::to_string(order_));
  }
  return TruncSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1), order);
}

TruncSeries TruncSeries::dilate(const Rational& c) const {
  auto v = c_;
  Rational ck = 1;
  for (auto& a : v) {
    a *= ck;
    ck *= c;
  }
  return TruncSeries(std::move(v), order_);
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
  auto v = c_;
  for (auto& a : v) a *= c;
  return TruncSeries(std::move(v), order_);
}

TruncSeries TruncSeries::inverse() const {
  if (order_ < 0) return *this;
  if (c_[0].is_zero()) throw Error(ErrorKind::NonUnitConstantTerm, "series with zero constant term");
  std::vector<Rational> r(order_ + 1);
  const Rational inv0 = c_[0].inverse();
  r[0] = inv0;
  for (int k = 1; k <= order_; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (!c_[i].is_zero()) acc += c_[i] * r[k - i];
    }
    r[k] = -acc * inv0;
  }
  return TruncSeries(std::move(r), order_);
}

TruncSeries TruncSeries::exp() const {
  if (order_ < 0) return *this;
  if (!c_[0].is_zero()) throw Error(ErrorKind::InvalidInput, "exp needs a zero constant term");
  // E' = y' E  =>  k e_k = sum_{i=1}^k i y_i e_{k-i}
  std::vector<Rational> e(order_ + 1);
  e[0] = 1;
  for (int k = 1; k <= order_; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (!c_[i].is_zero()) acc += Rational(i) * c_[i] * e[k - i];
    }
    e[k] = acc / Rational(k);
  }
  return TruncSeries(std::move(e), order_);
}

TruncSeries TruncSeries::shift_down(int k) const {
  if (k > order_ + 1) throw Error(ErrorKind::InsufficientCoefficients, "shift beyond tracked order");
  for (int i = 0; i < k; ++i) {
    if (!c_[i].is_zero()) {
      throw Error(ErrorKind::ShapeViolation, "coefficient of x^" + std::to_string(i) + " is nonzero");
    }
  }
  return TruncSeries(std::vector<Rational>(c_.begin() + k, c_.end()), order_ - k);
}

TruncSeries TruncSeries::shift_up(int k) const {
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return TruncSeries(std::move(v), order_ + k);
}

std::optional<int> TruncSeries::first_nonzero() const {
  for (int k = 0; k <= order_; ++k) {
    if (!c_[k].is_zero()) return k;
  }
  return std::nullopt;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  order_ = std::min(order_, o.order_);
  c_.resize(order_ + 1);
  for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  order_ = std::min(order_, o.order_);
  c_.resize(order_ + 1);
  for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> v(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return TruncSeries(std::move(v), n);
}

TruncSeries operator*(const Poly& p, const TruncSeries& s) {
  std::vector<Rational> v(s.order_ + 1);
  for (int i = 0; i <= p.degree() && i <= s.order_; ++i) {
    const Rational& pi = p.coeffs()[i];
    if (pi.is_zero()) continue;
    for (int j = 0; i + j <= s.order_; ++j) {
      if (!s.c_[j].is_zero()) v[i + j] += pi * s.c_[j];
    }
  }
  return TruncSeries(std::move(v), s.order_);
}

// ---- RationalFunction -------------------------------------------------------

RationalFunction::RationalFunction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den.eval(x);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtEvaluationPoint, "pole at x = " + x.str());
  return num.eval(x) / d;
}

TruncSeries RationalFunction::series(int order) const {
  return num * TruncSeries::from_poly(den, order).inverse();
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return {a.num - b.num, a.den};
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.num, a.den * b.den};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.den, a.den * b.num};
}

RationalFunction operator-(const RationalFunction& a) { return {-a.num, a.den}; }

}  // namespace qpade
