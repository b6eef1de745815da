#include "qpade/contiguity.hpp"

#include "qpade/error.hpp"

namespace qpade {

namespace {

Poly product_one_minus(std::span<const Rational> roots) {
  Poly p = Poly::constant(1);
  for (const auto& r : roots) p = p * Poly::one_minus(r);
  return p;
}

TruncSeries series_of(const Poly& p, int order) { return TruncSeries::from_poly(p, order); }

void require_zero_series(const TruncSeries& s, const char* what) {
  if (auto k = s.first_nonzero()) {
    throw Error(ErrorKind::ShapeViolation, std::string(what) + ": nonzero coefficient at x^" + std::to_string(*k));
  }
}

Poly reduce(const TruncSeries& D, const TruncSeries& Yinv, const Poly& den, int s, int claimed_degree,
            const char* name, int& checked) {
  const TruncSeries low = D.truncated(std::min(s - 1, D.order()));
  if (s > 0 && low.first_nonzero()) {
    throw Error(ErrorKind::ShapeViolation,
                std::string(name) + " has a nonzero coefficient at x^" + std::to_string(*low.first_nonzero()) +
                    " below x^" + std::to_string(s));
  }
  const TruncSeries r = den * (D.shift_down(s) * Yinv.truncated(D.order() - s));
  checked = r.order() + 1;
  if (r.order() < claimed_degree + 2) {
    throw Error(ErrorKind::InsufficientCoefficients, std::string(name) + ": working order too small");
  }
  for (int k = claimed_degree + 1; k <= r.order(); ++k) {
    if (!r.coeff(k).is_zero()) {
      throw Error(ErrorKind::ShapeViolation, std::string(name) + " reduced quotient has nonzero x^" +
                                                 std::to_string(k) + " coefficient (claimed degree " +
                                                 std::to_string(claimed_degree) + ")");
    }
  }
  std::vector<Rational> c(r.coeffs().begin(), r.coeffs().begin() + claimed_degree + 1);
  return Poly(std::move(c));
}

}  // namespace

GKHData gkh(const GeneratingParams& g) {
  GKHData d;
  d.G_num = product_one_minus(g.b);
  d.G_den = product_one_minus(g.a);
  d.K_num = g.b.empty() ? Poly::constant(1) : Poly::one_minus(g.b[0]);
  d.K_den = Poly::one_minus(g.a[0]);
  d.H = d.G_den;  // K_den is one of the factors of G_den
  return d;
}

CasoratiSet casorati(const GeneratingParams& g, int m, int n, int order) {
  return casorati_from_pairs(build_PQ(g, m, n), build_PQ(g.shifted(), m, n), order);
}

CasoratiSet casorati_from_pairs(const PadePair& base, const PadePair& shifted, int order) {
  CasoratiSet cs{base, shifted, order};
  const Rational& q = base.params.q;
  cs.gkh = gkh(base.params);
  cs.Y = generating_series(base.params, order);
  cs.Ybar = generating_series(shifted.params, order);
  cs.y1 = series_of(base.P, order);
  cs.y2 = base.Q * cs.Y;
  cs.y1bar = series_of(shifted.P, order);
  cs.y2bar = shifted.Q * cs.Ybar;

  const TruncSeries y1q = cs.y1.dilate(q), y2q = cs.y2.dilate(q);
  cs.D1 = cs.y1 * y2q - y1q * cs.y2;
  cs.D2 = cs.y1 * cs.y2bar - cs.y1bar * cs.y2;
  cs.D3 = y1q * cs.y2bar - cs.y1bar * y2q;

  const auto& k = cs.gkh;
  const Poly Pq = base.P.dilate(q), Qq = base.Q.dilate(q);
  cs.B1 = k.G_num * base.P * Qq - k.G_den * Pq * base.Q;
  cs.B2 = k.K_num * base.P * shifted.Q - k.K_den * shifted.P * base.Q;
  cs.B3 = k.H.divexact(k.K_den) * k.K_num * Pq * shifted.Q - k.H.divexact(k.G_den) * k.G_num * shifted.P * Qq;

  require_zero_series(k.G_den * cs.D1 - cs.B1 * cs.Y, "D1 brace route");
  require_zero_series(k.K_den * cs.D2 - cs.B2 * cs.Y, "D2 brace route");
  require_zero_series(k.H * cs.D3 - cs.B3 * cs.Y, "D3 brace route");
  return cs;
}

FactorData extract_factors(const CasoratiSet& cs, FormulaVariant variant) {
  const auto& g = cs.base.params;
  const Surface surf = g.surface;
  const int m = cs.base.m, n = cs.base.n, s = m + n + 1;
  const TruncSeries Yinv = cs.Y.inverse();

  int d3 = 0;
  switch (surf) {
    case Surface::E6: d3 = 2; break;
    case Surface::D5: d3 = 1; break;
    case Surface::A4: d3 = variant == FormulaVariant::Canonical ? 1 : 0; break;
    case Surface::A21: d3 = 0; break;
  }

  FactorData fd{surf};
  int c1n = 0, c2n = 0, c3n = 0;
  fd.R1 = reduce(cs.D1, Yinv, cs.gkh.G_den, s, 1, "D1", c1n);
  fd.R2 = reduce(cs.D2, Yinv, cs.gkh.K_den, s, 0, "D2", c2n);
  fd.R3 = reduce(cs.D3, Yinv, cs.gkh.H, s, d3, "D3", c3n);
  fd.checked_terms = std::min({c1n, c2n, c3n});

  // the polynomial route must give the same quotients exactly
  const Poly xs = Poly::monomial(Rational(1), s);
  if (cs.B1.divexact(xs) != fd.R1 || cs.B2.divexact(xs) != fd.R2 || cs.B3.divexact(xs) != fd.R3) {
    throw Error(ErrorKind::ShapeViolation, "brace polynomials disagree with the reduced series");
  }

  fd.c0 = fd.R1.coeff(0);
  if (fd.c0.is_zero()) throw Error(ErrorKind::ShapeViolation, "c0 = 0");
  fd.f = -fd.R1.coeff(1) / fd.c0;
  fd.c1 = fd.R2.coeff(0);
  if (fd.c1.is_zero()) throw Error(ErrorKind::ShapeViolation, "c1 = 0");

  const Rational& b1 = g.b.empty() ? Rational(0) : g.b[0];
  if (surf == Surface::E6) {
    const Rational R0 = fd.R3.coeff(0), R1 = fd.R3.coeff(1), R2 = fd.R3.coeff(2);
    if (R0.is_zero() || R2.is_zero()) throw Error(ErrorKind::ShapeViolation, "E6 D3 quotient is not quadratic");
    fd.g = b1 * R0 / R2;
    if (R1 != -R0 * (b1 + fd.g.inverse())) {
      throw Error(ErrorKind::ShapeViolation, "E6 D3 middle coefficient inconsistent with (1-b1 x)(1-x/g)");
    }
    const Rational a0 = g.q.pow(m);
    if (R0 != fd.c1 * g.a[1] * g.a[2] * a0 * fd.g / b1) {
      throw Error(ErrorKind::ShapeViolation, "E6 D3 prefactor differs from c1 a2 a3 q^m g / b1");
    }
  } else {
    const Rational c2 = fd.R3.coeff(0);
    if (c2.is_zero()) throw Error(ErrorKind::ShapeViolation, "c2 = 0");
    if (d3 == 1 && fd.R3.coeff(1) != -c2 * b1) {
      throw Error(ErrorKind::ShapeViolation, "D3 quotient is not proportional to (1 - b1 x)");
    }
    fd.c2 = c2;
    fd.g = fd.c1 / c2;
  }
  return fd;
}

namespace {

Rational tau_at(const GeneratingParams& g, int m, int n) {
  const Rational t = tau(g, m, n);
  if (t.is_zero()) throw Error(ErrorKind::DegenerateTau, "tau_{" + std::to_string(m) + "," + std::to_string(n) + "} = 0");
  return t;
}

/// prod_i (1 - xs_i / y)
Rational prod_one_minus_over(std::span<const Rational> xs, const Rational& y) {
  Rational r(1);
  for (const auto& x : xs) r *= Rational(1) - x / y;
  return r;
}

}  // namespace

SpecialFG special_fg(const GeneratingParams& g, int m, int n, FormulaVariant variant) {
  const Rational& q = g.q;
  const Rational qi = q.inverse();
  const Rational& a1 = g.a[0];
  const Rational& a2 = g.a[1];
  const GeneratingParams gT = g.shifted();

  // (1 - f/a1)/(1 - f/a2) = R
  const Rational preF = a1 * prod_one_minus_over(g.b, a1) / (a2 * prod_one_minus_over(g.b, a2));
  const Rational R = preF * tau_at(g.with_a_scaled(0, q), m, n + 1) * tau_at(g.with_a_scaled(0, qi), m + 1, n) /
                     (tau_at(g.with_a_scaled(1, q), m, n + 1) * tau_at(g.with_a_scaled(1, qi), m + 1, n));
  const Rational fden = a1.inverse() - R / a2;
  if (fden.is_zero()) throw Error(ErrorKind::RatioSingular, "f ratio equation is independent of f");
  SpecialFG out;
  out.f = (Rational(1) - R) / fden;

  if (g.surface == Surface::E6) {
    const Rational& b2 = g.b[1];
    const Rational& b3 = g.b[2];
    const std::array<Rational, 2> a23{g.a[1], g.a[2]};
    const Rational preG = b2 * prod_one_minus_over(a23, b2) / (b3 * prod_one_minus_over(a23, b3));
    const Rational Rg = preG * tau_at(g.with_b_scaled(1, qi), m, n + 1) * tau_at(gT.with_b_scaled(1, q), m + 1, n) /
                        (tau_at(g.with_b_scaled(2, qi), m, n + 1) * tau_at(gT.with_b_scaled(2, q), m + 1, n));
    if (Rg == Rational(1)) throw Error(ErrorKind::RatioSingular, "g ratio equation is independent of g");
    out.g = (b2.inverse() - Rg / b3) / (Rational(1) - Rg);
    return out;
  }

  Rational preG = a1 / (q.pow(n) * a2);
  if (g.surface == Surface::D5) preG *= (Rational(1) - g.b[0] / a1) / (Rational(1) - g.b[1] / a2);
  if (variant == FormulaVariant::Canonical) {
    preG = -preG;
    if (g.surface == Surface::A4) preG *= Rational(1) - g.b[0] / a1;
  }
  out.g = preG * tau_at(g.with_a_scaled(0, q), m, n + 1) * tau_at(gT.with_a_scaled(0, qi), m + 1, n) /
          (tau_at(gT.with_a_scaled(1, q), m, n + 1) * tau_at(g.with_a_scaled(1, qi), m + 1, n));
  return out;
}

TruncSeries ContiguityOperator::apply(const TruncSeries& y, const TruncSeries& ybar, const Rational& q) const {
  const int order = std::min(y.order(), ybar.order());
  TruncSeries acc(std::vector<Rational>{}, order);
  for (int i = 0; i < 3; ++i) {
    const TruncSeries& src = slot[i].bar ? ybar : y;
    acc += coeff[i] * src.dilate(q.pow(slot[i].shift));
  }
  return acc;
}

ContiguityData contiguity_data(const GeneratingParams& g, int m, int n, const std::array<Rational, 3>& pair_scales,
                               FormulaVariant variant) {
  const int N = casorati_order(g.surface, m, n);
  const GeneratingParams gT = g.shifted();
  const PadePair p0 = build_PQ(g, m, n).scaled(pair_scales[0]);
  const PadePair p1 = build_PQ(gT, m, n).scaled(pair_scales[1]);
  const PadePair p2 = build_PQ(gT.shifted(), m, n).scaled(pair_scales[2]);
  ContiguityData cd{casorati_from_pairs(p0, p1, N), casorati_from_pairs(p1, p2, N)};
  cd.fd = extract_factors(cd.cs, variant);
  cd.fdT = extract_factors(cd.csT, variant);
  cd.C0 = cd.fd.c0 / cd.fd.c1;
  cd.C1 = cd.fdT.c0 / cd.fd.c1;
  return cd;
}

L2L3 assemble_L2_L3(const ContiguityData& cd) {
  const auto& g = cd.cs.base.params;
  const int m = cd.cs.base.m, n = cd.cs.base.n;
  const Rational& q = g.q;
  const Rational qm = q.pow(m), qmn1 = q.pow(m + n + 1);
  const Rational& f = cd.fd.f;
  const Rational& gg = cd.fd.g;
  const Rational& fbar = cd.fdT.f;
  const Rational& a1 = g.a[0];
  const Rational& a2 = g.a[1];
  auto om = [](const Rational& c) { return Poly::one_minus(c); };

  L2L3 ops;
  ops.L2.slot = {Slot{true, 0}, Slot{false, 1}, Slot{false, 0}};
  ops.L3.slot = {Slot{false, 0}, Slot{true, 0}, Slot{true, -1}};
  ops.L2.coeff[0] = om(f).scaled(cd.C0);
  ops.L3.coeff[0] = om(fbar / q).scaled(cd.C1);

  if (g.surface == Surface::E6) {
    const Rational& a3 = g.a[2];
    const Rational& b1 = g.b[0];
    const Rational k = a2 * a3 * qm * gg / b1;
    ops.L2.coeff[1] = -(om(a2) * om(a3));
    ops.L2.coeff[2] = (om(b1) * om(gg.inverse())).scaled(k);
    ops.L3.coeff[1] = (om(a1) * om((q * gg).inverse())).scaled(k);
    ops.L3.coeff[2] = (om(g.b[1] / q) * om(g.b[2] / q)).scaled(-qmn1);
    return ops;
  }
  ops.L2.coeff[1] = -om(a2);
  ops.L2.coeff[2] = (g.surface == Surface::A21 ? Poly::constant(1) : om(g.b[0])).scaled(gg.inverse());
  ops.L3.coeff[1] = om(a1).scaled(gg.inverse());
  ops.L3.coeff[2] = (g.surface == Surface::D5 ? om(g.b[1] / q) : Poly::constant(1)).scaled(-qmn1);
  return ops;
}

}  // namespace qpade
