#include "qpade/qspecial.hpp"

#include <algorithm>
#include <functional>

#include "qpade/error.hpp"

namespace qpade {

Rational qpoch(const Rational& a, const Rational& q, int j) {
  Rational r = 1;
  Rational aq = a;
  for (int k = 0; k < j; ++k) {
    r *= Rational(1) - aq;
    aq *= q;
  }
  return r;
}

Rational qpoch(std::span<const Rational> as, const Rational& q, int j) {
  Rational r = 1;
  for (const auto& a : as) r *= qpoch(a, q, j);
  return r;
}

namespace {

void require_terminating(std::span<const Rational> upper, const Rational& q, int k_term) {
  if (k_term < 0) throw Error(ErrorKind::NonTerminating, "negative termination index");
  const Rational target = q.pow(-k_term);
  if (std::none_of(upper.begin(), upper.end(), [&](const Rational& a) { return a == target; })) {
    throw Error(ErrorKind::NonTerminating, "no upper parameter equals q^-" + std::to_string(k_term));
  }
}

}  // namespace

Rational qhgf_terminating(const QhgfData& h, int k_term) {
  const auto& q = h.base;
  require_terminating(h.upper, q, k_term);
  const long balance = 1 + static_cast<long>(h.lower.size()) - static_cast<long>(h.upper.size());

  Rational sum = 0;
  Rational upper = 1;   // (a_1..a_k;q)_s
  Rational lower = 1;   // (b_1..b_l,q;q)_s
  Rational xs = 1;      // x^s
  for (int s = 0; s <= k_term; ++s) {
    if (s > 0) {
      const Rational qs = q.pow(s - 1);
      for (const auto& a : h.upper) upper *= Rational(1) - a * qs;
      for (const auto& b : h.lower) lower *= Rational(1) - b * qs;
      lower *= Rational(1) - q * qs;
      xs *= h.argument;
    }
    if (upper.is_zero()) continue;
    if (lower.is_zero()) {
      throw Error(ErrorKind::DivisionByZero, "lower q-Pochhammer vanishes at s=" + std::to_string(s));
    }
    Rational factor = q.pow(static_cast<long>(s) * (s - 1) / 2);
    if (s % 2 == 1) factor = -factor;
    sum += upper / lower * factor.pow(balance) * xs;
  }
  return sum;
}

Rational lauricella_phiD(const Rational& alpha, std::span<const Rational> betas, const Rational& gamma,
                         std::span<const Rational> zs, const Rational& q, int k_term) {
  if (betas.size() != zs.size()) {
    throw Error(ErrorKind::InvalidInput, "phi_D needs as many arguments as beta parameters");
  }
  require_terminating(std::span<const Rational>(&alpha, 1), q, k_term);
  const std::size_t l = betas.size();

  // Per-coordinate tables (beta_i;q)_j z_i^j / (q;q)_j, j <= k_term.
  std::vector<std::vector<Rational>> table(l, std::vector<Rational>(k_term + 1));
  for (std::size_t i = 0; i < l; ++i) {
    Rational zj = 1;
    for (int j = 0; j <= k_term; ++j) {
      table[i][j] = qpoch(betas[i], q, j) * zj / qpoch(q, q, j);
      zj *= zs[i];
    }
  }
  std::vector<Rational> outer(k_term + 1);
  for (int t = 0; t <= k_term; ++t) {
    const Rational num = qpoch(alpha, q, t);
    if (num.is_zero()) continue;
    const Rational den = qpoch(gamma, q, t);
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "(gamma;q)_" + std::to_string(t) + " vanishes");
    outer[t] = num / den;
  }

  Rational sum = 0;
  std::vector<int> idx(l, 0);
  std::function<void(std::size_t, int, Rational)> walk = [&](std::size_t i, int used, Rational acc) {
    if (i == l) {
      if (!outer[used].is_zero()) sum += outer[used] * acc;
      return;
    }
    for (int j = 0; used + j <= k_term; ++j) walk(i + 1, used + j, acc * table[i][j]);
  };
  walk(0, 0, Rational(1));
  return sum;
}

}  // namespace qpade
