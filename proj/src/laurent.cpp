#include "qpade/laurent.hpp"

#include <algorithm>

#include "qpade/error.hpp"

namespace qpade {

Laurent::Laurent(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Laurent Laurent::monomial(const Rational& c, int k) {
  Laurent r(c);
  if (!c.is_zero()) r.val_ = k;
  return r;
}

std::optional<int> Laurent::valuation() const {
  if (c_.empty()) return std::nullopt;
  return val_;
}

Rational Laurent::leading() const { return c_.empty() ? Rational(0) : c_.front(); }

void Laurent::normalize() {
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  if (k == c_.size()) {
    c_.clear();
    val_ = 0;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
  val_ += static_cast<int>(k);
  const int keep = std::max(0, prec_ - val_);
  if (static_cast<int>(c_.size()) > keep) c_.resize(keep);
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) val_ = 0;
}

Laurent::Limit Laurent::limit() const {
  if (c_.empty()) {
    if (prec_ > 0) return {false, Rational(0)};
    throw Error(ErrorKind::CertificationFailed, "eps-expansion lost all precision");
  }
  if (val_ > 0) return {false, Rational(0)};
  if (val_ < 0) return {true, Rational(0)};
  return {false, c_.front()};
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.c_.empty() && b.c_.empty()) {
    Laurent r;
    r.prec_ = std::min(a.prec_, b.prec_);
    return r;
  }
  Laurent r;
  r.prec_ = std::min(a.prec_, b.prec_);
  int lo = a.c_.empty() ? b.val_ : b.c_.empty() ? a.val_ : std::min(a.val_, b.val_);
  r.val_ = lo;
  int hi = lo;
  for (const Laurent* t : {&a, &b}) {
    if (!t->c_.empty()) hi = std::max(hi, t->val_ + static_cast<int>(t->c_.size()));
  }
  hi = std::min(hi, r.prec_);
  if (hi > lo) r.c_.assign(hi - lo, Rational(0));
  for (const Laurent* t : {&a, &b}) {
    for (std::size_t i = 0; i < t->c_.size(); ++i) {
      const int e = t->val_ + static_cast<int>(i);
      if (e < hi) r.c_[e - lo] += t->c_[i];
    }
  }
  r.normalize();
  return r;
}

Laurent operator-(const Laurent& a) {
  Laurent r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.c_.empty() || b.c_.empty()) {
    // O(eps^p) times something with known leading exponent v is O(eps^{p+v})
    const Laurent& z = a.c_.empty() ? a : b;
    const Laurent& o = a.c_.empty() ? b : a;
    r.prec_ = std::min(Laurent::kExact, o.c_.empty() ? z.prec_ + o.prec_ : z.prec_ + o.val_);
    return r;
  }
  const int ra = a.prec_ - a.val_, rb = b.prec_ - b.val_;
  const int rel = std::min(ra, rb);
  r.val_ = a.val_ + b.val_;
  r.prec_ = rel >= Laurent::kExact / 2 ? Laurent::kExact : r.val_ + rel;
  const int len = std::min<int>(rel, static_cast<int>(a.c_.size() + b.c_.size()) - 1);
  r.c_.assign(len, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size() && static_cast<int>(i + j) < len; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

Laurent Laurent::inverse() const {
  if (c_.empty()) throw Error(ErrorKind::CertificationFailed, "division by an eps-expansion with no known term");
  const int rel_in = prec_ - val_;
  int rel = rel_in;
  if (c_.size() > 1) rel = std::min(rel, kWorkingTerms);
  Laurent r;
  r.val_ = -val_;
  r.prec_ = rel >= kExact / 2 ? kExact : r.val_ + rel;
  const int len = std::min(rel, c_.size() == 1 ? 1 : kWorkingTerms);
  r.c_.assign(len, Rational(0));
  const Rational inv0 = c_[0].inverse();
  for (int k = 0; k < len; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (int i = 1; i <= k && i < static_cast<int>(c_.size()); ++i) acc -= c_[i] * r.c_[k - i];
    r.c_[k] = acc * inv0;
  }
  r.normalize();
  return r;
}

}  // namespace qpade
