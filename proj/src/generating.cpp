#include "qpade/generating.hpp"

#include <array>

#include "qpade/error.hpp"
#include "qpade/qspecial.hpp"

namespace qpade {

TruncSeries qpoch_inf_series(const Rational& a, const Rational& q, int order) {
  std::vector<Rational> c(order + 1);
  Rational qq = 1;   // (q;q)_n
  Rational an = 1;   // (-a)^n
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      qq *= Rational(1) - q.pow(n);
      an *= -a;
    }
    if (qq.is_zero()) throw Error(ErrorKind::DivisionByZero, "(q;q)_" + std::to_string(n) + " vanishes");
    c[n] = an * q.pow(static_cast<long>(n) * (n - 1) / 2) / qq;
  }
  return TruncSeries(std::move(c), order);
}

TruncSeries qpoch_inf_inverse_series(const Rational& b, const Rational& q, int order) {
  std::vector<Rational> c(order + 1);
  Rational qq = 1;
  Rational bn = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      qq *= Rational(1) - q.pow(n);
      bn *= b;
    }
    if (qq.is_zero()) throw Error(ErrorKind::DivisionByZero, "(q;q)_" + std::to_string(n) + " vanishes");
    c[n] = bn / qq;
  }
  return TruncSeries(std::move(c), order);
}

TruncSeries generating_series(const GeneratingParams& g, int order) {
  TruncSeries y = TruncSeries::one(order);
  for (const auto& a : g.a) y = y * qpoch_inf_series(a, g.q, order);
  for (const auto& b : g.b) y = y * qpoch_inf_inverse_series(b, g.q, order);
  return y;
}

TruncSeries tsuda_series(const GeneratingParams& g, int order) {
  if (g.surface != Surface::E6 && g.surface != Surface::D5) {
    throw Error(ErrorKind::InvalidInput, "the exponential form applies to E6 and D5 only");
  }
  std::vector<Rational> log(order + 1);
  for (int k = 1; k <= order; ++k) {
    const Rational den = Rational(k) * (Rational(1) - g.q.pow(k));
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "1 - q^" + std::to_string(k) + " vanishes");
    Rational num = 0;
    for (std::size_t s = 0; s < g.a.size(); ++s) num += g.b[s].pow(k) - g.a[s].pow(k);
    log[k] = num / den;
  }
  return TruncSeries(std::move(log), order).exp();
}

Rational pk_closed_form(const GeneratingParams& g, int k, FormulaVariant variant) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "p_k needs k >= 0");
  const Rational& q = g.q;
  const Rational qk = q.pow(-k);
  const Rational qqk = qpoch(q, q, k);
  switch (g.surface) {
    case Surface::E6: {
      const auto& a = g.a;
      const auto& b = g.b;
      const std::array<Rational, 2> betas{a[0] / b[0], a[1] / b[1]};
      const std::array<Rational, 2> zs{q * b[0] / a[2], q * b[1] / a[2]};
      const Rational gamma = q.pow(1 - k) * b[2] / a[2];
      return b[2].pow(k) * qpoch(a[2] / b[2], q, k) / qqk * lauricella_phiD(qk, betas, gamma, zs, q, k);
    }
    case Surface::D5: {
      const auto& a = g.a;
      const auto& b = g.b;
      QhgfData h{{qk, a[0] / b[0]}, {b[1] * q.pow(1 - k) / a[1]}, q, q * b[0] / a[1]};
      return b[1].pow(k) * qpoch(a[1] / b[1], q, k) / qqk * qhgf_terminating(h, k);
    }
    case Surface::A4: {
      const auto& a = g.a;
      const auto& b = g.b;
      QhgfData h{{qk, a[0] / b[0]}, {Rational(0)}, q, q * b[0] / a[1]};
      return q.pow(static_cast<long>(k) * (k - 1) / 2) * (-a[1]).pow(k) / qqk * qhgf_terminating(h, k);
    }
    case Surface::A21: {
      const auto& a = g.a;
      QhgfData h{{qk}, {Rational(0)}, q, q * a[0] / a[1]};
      const Rational pref = variant == FormulaVariant::Literal ? qpoch(a[1], q, k) : a[1].pow(k);
      const Rational sign = k % 2 ? Rational(-1) : Rational(1);
      return sign * q.pow(static_cast<long>(k) * (k - 1) / 2) * pref / qqk * qhgf_terminating(h, k);
    }
  }
  return 0;
}

}  // namespace qpade
