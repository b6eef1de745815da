#include "qpade/painleve.hpp"

#include <functional>
#include <sstream>

#include "qpade/error.hpp"
#include "qpade/laurent.hpp"

namespace qpade {

namespace {

// The first equation relates (g, ug) at fixed f; the second relates (f, fbar) at fixed g.
// For E6 they read (fg-1)(f g'-1) = S(f) and (fg-1)(f' g-1) = R(g); otherwise g g' = S(f)
// and f f' = R(g).

template <class T>
T eq1_rhs(const ParamSet& p, const T& f) {
  const Rational q = p.q(), a0 = p.a0(), b0 = p.b0();
  switch (p.surface()) {
    case Surface::E6: {
      const Rational k = b0 * p.b(1) * p.b(1) / (a0 * p.a(2) * p.a(2) * p.a(3) * p.a(3));
      return T(k) * (f - p.a(2)) * (f - p.a(3)) * (f - p.b(2)) * (f - p.b(3)) / ((f - p.a(1)) * (f - p.b(1)));
    }
    case Surface::D5:
      return (f - p.a(1)) * (f - p.b(1)) / (T(q * a0 * b0) * (f - p.a(2)) * (f - p.b(2)));
    case Surface::A4:
      return (f - p.a(1)) * (f - p.b(1)) / (T(q * a0 * b0) * f * (f - p.a(2)));
    case Surface::A21:
      return (f - p.a(1)) / (T(q * a0 * b0) * (f - p.a(2)));
  }
  return T(0);
}

template <class T>
T eq2_rhs(const ParamSet& p, const T& g) {
  const Rational q = p.q(), a0 = p.a0(), b0 = p.b0();
  const Rational one(1);
  switch (p.surface()) {
    case Surface::E6: {
      const Rational a2 = p.a(2), a3 = p.a(3), b1 = p.b(1);
      return T(q * p.a(1) * b1) * (g - a2.inverse()) * (g - a3.inverse()) * (g - p.b(2).inverse()) *
             (g - p.b(3).inverse()) / ((g - b1 / (a0 * a2 * a3)) * (g - q * b0 * b1 / (a2 * a3)));
    }
    case Surface::D5:
      return T(p.a(2) * p.b(2)) * (g - p.b(1) / (a0 * p.a(2))) * (g - p.a(1) / (b0 * p.b(2))) /
             ((g - one) * (g - (q * a0 * b0).inverse()));
    case Surface::A4:
      return T(-p.a(1) * p.a(2) / b0) * (g - p.b(1) / (a0 * p.a(2))) / ((g - one) * (g - (q * a0 * b0).inverse()));
    case Surface::A21:
      return T(-p.a(1) * p.a(2) / b0) * g / ((g - one) * (g - (q * a0 * b0).inverse()));
  }
  return T(0);
}

/// g' with (f, g, g') on the first equation.
template <class T>
T eq1_partner(const ParamSet& p, const T& f, const T& g) {
  const T s = eq1_rhs(p, f);
  if (p.surface() == Surface::E6) return (s / (f * g - T(1)) + T(1)) / f;
  return s / g;
}

/// f' with (f, f', g) on the second equation.
template <class T>
T eq2_partner(const ParamSet& p, const T& g, const T& f) {
  const T r = eq2_rhs(p, g);
  if (p.surface() == Surface::E6) return (r / (f * g - T(1)) + T(1)) / g;
  return r / f;
}

template <class Fn>
auto singular_guard(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DivisionByZero) throw Error(ErrorKind::StepSingular, std::string(what) + ": " + e.what());
    throw;
  }
}

void reject_e6_branch(const ParamSet& p, const Rational& f, const Rational& g, const char* what) {
  if (p.surface() == Surface::E6 && f * g == Rational(1)) {
    throw Error(ErrorKind::StepSingular, std::string(what) + ": fg = 1");
  }
}

}  // namespace

Step step_forward(const ParamSet& p, const State& s) {
  return singular_guard("step_forward", [&] {
    reject_e6_branch(p, s.f, s.g, "step_forward");
    const Rational fb = eq2_partner(p, s.g, s.f);
    const ParamSet pT = p.shifted();
    reject_e6_branch(pT, fb, s.g, "step_forward");
    const Rational gb = eq1_partner(pT, fb, s.g);
    return Step{State{fb, gb}, pT};
  });
}

Step step_backward(const ParamSet& p, const State& s) {
  return singular_guard("step_backward", [&] {
    reject_e6_branch(p, s.f, s.g, "step_backward");
    const Rational ug = eq1_partner(p, s.f, s.g);
    const ParamSet pU = p.unshifted();
    reject_e6_branch(pU, s.f, ug, "step_backward");
    const Rational uf = eq2_partner(pU, ug, s.f);
    return Step{State{uf, ug}, pU};
  });
}

std::array<Rational, 2> evolution_residuals(const ParamSet& p, const State& s, const State& sb) {
  const ParamSet pT = p.shifted();
  const Rational one(1);
  if (p.surface() == Surface::E6) {
    return {(s.f * s.g - one) * (sb.f * s.g - one) - eq2_rhs(p, s.g),
            (sb.f * sb.g - one) * (sb.f * s.g - one) - eq1_rhs(pT, sb.f)};
  }
  return {s.f * sb.f - eq2_rhs(p, s.g), s.g * sb.g - eq1_rhs(pT, sb.f)};
}

Rational c0c1(const ParamSet& p, const State& s) {
  const Rational& g = s.g;
  const Rational q = p.q(), a0 = p.a0(), b0 = p.b0();
  if (p.surface() == Surface::E6) {
    const Rational b1 = p.b(1), a23 = p.a(2) * p.a(3);
    return a0 * (b1 - a0 * a23 * g) * (q * b0 * b1 - a23 * g) / (b1 * b1);
  }
  return (Rational(1) - g) * (Rational(1) - q * a0 * b0 * g) / (g * g);
}

// ---------------------------------------------------------------- base points

std::vector<BasePoint> base_points(const ParamSet& p, FormulaVariant variant) {
  using K = BasePoint::Kind;
  const Rational q = p.q(), a0 = p.a0(), b0 = p.b0();
  std::vector<BasePoint> pts;
  auto fin = [&](std::string label, Rational f, Rational g) {
    pts.push_back({K::Finite, std::move(label), std::move(f), std::move(g)});
  };
  auto inf_f = [&](std::string label, Rational g) {
    pts.push_back({K::Infinite, std::move(label), std::nullopt, std::move(g)});
  };
  auto inf_g = [&](std::string label, Rational f) {
    pts.push_back({K::Infinite, std::move(label), std::move(f), std::nullopt});
  };
  auto dbl = [&](std::string label, Rational lead, int power) {
    BasePoint b{K::Double, std::move(label)};
    b.lead = std::move(lead);
    b.power = power;
    b.multiplicity = 2;
    pts.push_back(std::move(b));
  };

  switch (p.surface()) {
    case Surface::E6: {
      const Rational a2 = p.a(2), a3 = p.a(3), b2 = p.b(2), b3 = p.b(3), a1 = p.a(1), b1 = p.b(1);
      if (variant == FormulaVariant::Canonical) {
        fin("(a2, 1/a2)", a2, a2.inverse());
        fin("(a3, 1/a3)", a3, a3.inverse());
        fin("(b2, 1/b2)", b2, b2.inverse());
        fin("(b3, 1/b3)", b3, b3.inverse());
      } else {
        fin("(1/a2, a2)", a2.inverse(), a2);
        fin("(1/a3, a3)", a3.inverse(), a3);
        fin("(1/b2, b2)", b2.inverse(), b2);
        fin("(1/b3, b3)", b3.inverse(), b3);
      }
      inf_g("(a1, inf)", a1);
      inf_g("(b1, inf)", b1);
      inf_f("(inf, b1/(a0 a2 a3))", b1 / (a0 * a2 * a3));
      inf_f("(inf, q b0 b1/(a2 a3))", q * b0 * b1 / (a2 * a3));
      break;
    }
    case Surface::D5:
      fin("(a1, 0)", p.a(1), Rational(0));
      fin("(b1, 0)", p.b(1), Rational(0));
      fin("(0, b1/(a0 a2))", Rational(0), p.b(1) / (a0 * p.a(2)));
      fin("(0, a1/(b0 b2))", Rational(0), p.a(1) / (b0 * p.b(2)));
      inf_f("(inf, 1)", Rational(1));
      inf_f("(inf, 1/(q a0 b0))", (q * a0 * b0).inverse());
      inf_g("(a2, inf)", p.a(2));
      inf_g("(b2, inf)", p.b(2));
      break;
    case Surface::A4:
      fin("(a1, 0)", p.a(1), Rational(0));
      fin("(b1, 0)", p.b(1), Rational(0));
      fin("(0, b1/(a0 a2))", Rational(0), p.b(1) / (a0 * p.a(2)));
      inf_f("(inf, 1)", Rational(1));
      inf_f("(inf, 1/(q a0 b0))", (q * a0 * b0).inverse());
      inf_g("(a2, inf)", p.a(2));
      dbl("(eps, -a1/(b0 eps))_2", -p.a(1) / b0, -1);
      break;
    case Surface::A21:
      fin("(a1, 0)", p.a(1), Rational(0));
      inf_f("(inf, 1)", Rational(1));
      inf_f("(inf, 1/(q a0 b0))", (q * a0 * b0).inverse());
      inf_g("(a2, inf)", p.a(2));
      dbl("(eps, -a1/(b0 eps))_2", -p.a(1) / b0, -1);
      dbl("(eps, -eps/(a0 a2))_2", -(a0 * p.a(2)).inverse(), 1);
      break;
  }
  return pts;
}

namespace {

std::string limit_str(const Laurent::Limit& l) { return l.infinite ? "inf" : l.value.str(); }

/// Collects the limits of one map over a set of approach parameters; the map certifies the
/// point when two of them differ.
struct LimitSet {
  std::vector<Laurent::Limit> seen;
  void add(const std::function<Laurent()>& fn) {
    try {
      seen.push_back(fn().limit());
    } catch (const Error&) {
      // an approach parameter that hits a special direction is simply skipped
    }
  }
  bool varies() const {
    for (std::size_t i = 1; i < seen.size(); ++i) {
      if (!(seen[i] == seen[0])) return true;
    }
    return false;
  }
  std::string str() const {
    std::string s;
    for (const auto& l : seen) s += (s.empty() ? "" : ", ") + limit_str(l);
    return "{" + s + "}";
  }
};

const std::array<Rational, 3> kApproach = {Rational(2), Rational(3, 5), Rational(-7, 3)};

}  // namespace

CertificationReport probe_base_point(const ParamSet& p, const BasePoint& pt) {
  CertificationReport rep;
  const Laurent e = Laurent::eps();
  std::vector<std::pair<std::string, LimitSet>> maps;

  if (pt.kind == BasePoint::Kind::Double) {
    const ParamSet pT = p.shifted(), pU = p.unshifted();
    LimitSet fb, gb, uf, ug;
    for (const auto& s : kApproach) {
      const Laurent f = e;
      const Laurent g = Laurent::monomial(pt.lead, pt.power) + Laurent::monomial(s, pt.power + 1);
      fb.add([&] { return eq2_partner(p, g, f); });
      gb.add([&] { return eq1_partner(pT, eq2_partner(p, g, f), g); });
      ug.add([&] { return eq1_partner(p, f, g); });
      uf.add([&] { return eq2_partner(pU, eq1_partner(p, f, g), f); });
    }
    maps = {{"T (fbar)", fb}, {"T (gbar)", gb}, {"T^-1 (ug)", ug}, {"T^-1 (uf)", uf}};
  } else {
    LimitSet fb, ug;
    for (const auto& k : kApproach) {
      const Laurent f = pt.f ? Laurent(*pt.f) + e : e.inverse();
      const Laurent g = pt.g ? Laurent(*pt.g) + Laurent(k) * e : (Laurent(k) * e).inverse();
      fb.add([&] { return eq2_partner(p, g, f); });
      ug.add([&] { return eq1_partner(p, f, g); });
    }
    maps = {{"fbar", fb}, {"ug", ug}};
  }

  for (const auto& [name, ls] : maps) {
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += name + " -> " + ls.str();
    if (!rep.certified && ls.varies()) {
      rep.certified = true;
      rep.map = name;
    }
  }
  return rep;
}

CertificationReport certify_base_point(const ParamSet& p, const BasePoint& pt) {
  auto rep = probe_base_point(p, pt);
  if (!rep.certified) {
    throw Error(ErrorKind::CertificationFailed, pt.label + " is not an indeterminacy point: " + rep.detail);
  }
  return rep;
}

// ---------------------------------------------------------------- Lax pair

TruncSeries LaxOperator::apply(const TruncSeries& y, const TruncSeries& ybar, const Rational& q, int order) const {
  TruncSeries acc(std::vector<Rational>{}, order);
  for (int i = 0; i < 3; ++i) {
    const TruncSeries& src = slot[i].bar ? ybar : y;
    acc += coeff[i].series(order) * src.dilate(q.pow(slot[i].shift));
  }
  return acc;
}

std::array<Rational, 3> LaxOperator::eval(const Rational& x) const {
  return {coeff[0].eval(x), coeff[1].eval(x), coeff[2].eval(x)};
}

namespace {

using RF = RationalFunction;
Poly om(const Rational& c) { return Poly::one_minus(c); }
RF K(const Rational& c) { return RF(c); }

}  // namespace

LaxPair lax_pair(const ParamSet& p, const State& s, FormulaVariant variant) {
  const Rational q = p.q(), a0 = p.a0(), b0 = p.b0();
  const Rational& f = s.f;
  const Rational& g = s.g;
  const Rational qi = q.inverse();
  const Rational one(1);
  const bool literal = variant == FormulaVariant::Literal;
  LaxPair lp;
  lp.L1.slot = {Slot{false, -1}, Slot{false, 0}, Slot{false, 1}};
  lp.L2.slot = {Slot{true, 0}, Slot{false, 0}, Slot{false, 1}};
  RF A1, A2, A3;

  switch (p.surface()) {
    case Surface::E6: {
      const Rational a1 = p.a(1), a2 = p.a(2), a3 = p.a(3), b1 = p.b(1), b2 = p.b(2), b3 = p.b(3);
      const RF P1 = RF(om(b1 * qi) * om(b2 * qi) * om(b3 * qi), om(f * qi)) * K(a0 * b0);
      A1 = P1;
      A2 = -(P1 * RF(om(a2 * qi) * om(a3 * qi), om(b1 * qi) * Poly({g, -qi})) * K(a1 / (b0 * b2 * b3)));
      const RF P3 = RF(om(a1) * om(a2) * om(a3), om(f)) * K(qi);
      A3 = P3;
      A2 = A2 - P3 * RF(om(b1) * Poly({g, Rational(-1)}), om(a2) * om(a3)) * K(b0 * b2 * b3 / a1);
      const Rational c = (one - b2 * b3 * g / (q * a0 * a1)) * (one - b0 * b2 * b3 * g / a1);
      const Rational k = (one - a2 * g) * (one - a3 * g) * (one - b2 * g) * (one - b3 * g) / (one - f * g);
      A2 = A2 + (K(c) + RF(Poly::monomial(k, 1), Poly({g * q, Rational(-1)}))) * K(a0 * a1 / (b2 * b3 * g));
      lp.L2.coeff = {RF(om(f)), RF((om(b1) * om(g.inverse())).scaled(a0 * a2 * a3 * g / b1)),
                     RF(-(om(a2) * om(a3)))};
      break;
    }
    case Surface::D5: {
      const Rational a1 = p.a(1), a2 = p.a(2), b1 = p.b(1), b2 = p.b(2);
      A2 = RF(Poly({(one - g) * (one - q * a0 * b0 * g), -(a1 - b0 * b2 * g) * (b1 - a0 * a2 * g) / f}));
      const RF P3 = RF((om(a1) * om(a2)).scaled(g), om(f));
      A3 = P3;
      A2 = A2 - P3 * RF(om(b1), om(a2).scaled(g));
      const RF P1 = RF((om(b1 * qi) * om(b2 * qi)).scaled(q * a0 * b0 * g), om(f * qi));
      A1 = P1;
      A2 = A2 - P1 * RF(om(a2 * qi).scaled(g), om(b1 * qi));
      lp.L2.coeff = {RF(om(f)), RF(om(b1).scaled(g.inverse())), RF(-om(a2))};
      break;
    }
    case Surface::A4: {
      const Rational a1 = p.a(1), a2 = p.a(2), b1 = p.b(1);
      const RF P1 = RF(om(b1 * qi).scaled(q * a0 * b0 * g), -om(f * qi));
      A1 = P1;
      A2 = -(P1 * RF(om(a2 * qi).scaled(g), om(b1 * qi)));
      const RF P3 = RF((om(a1) * om(a2)).scaled(g), -om(f));
      A3 = P3;
      A2 = A2 - P3 * RF(om(b1), om(a2).scaled(g));
      const Rational k = literal ? q * a0 * b0 - one : q * a0 * b0 * g - one;
      A2 = A2 + RF(Poly({-(g - one) * k, a1 * (b1 - a0 * a2 * g) / f}));
      lp.L2.coeff = {RF(om(f)), RF(om(b1).scaled(g.inverse())), RF(-om(a2))};
      break;
    }
    case Surface::A21: {
      const Rational a1 = p.a(1), a2 = p.a(2);
      const RF P1 = RF(Poly::constant(q * a0 * b0 * g), om(f * qi));
      A1 = P1;
      A2 = -(P1 * RF(om(a2 * qi).scaled(g)));
      const RF P3 = RF((om(a1) * om(a2)).scaled(g), om(f));
      A3 = P3;
      A2 = A2 - P3 * RF(Poly::constant(1), om(a2).scaled(g));
      const Rational k = literal ? q * a0 * b0 - one : q * a0 * b0 * g - one;
      A2 = A2 + RF(Poly({(g - one) * k, a0 * a1 * a2 * g / f}));
      lp.L2.coeff = {RF(om(f)), K(g.inverse()), RF(-om(a2))};
      break;
    }
  }
  lp.L1.coeff = {A1, A2, A3};
  return lp;
}

LaxOperator l3_operator(const ParamSet& p, const State& s, const Rational& fbar, const Rational& cc) {
  const Rational q = p.q(), a0 = p.a0(), b0 = p.b0();
  const Rational qi = q.inverse();
  LaxOperator L3;
  L3.slot = {Slot{false, 0}, Slot{true, 0}, Slot{true, -1}};
  L3.coeff[0] = RF(om(fbar * qi).scaled(cc));
  if (p.surface() == Surface::E6) {
    L3.coeff[1] = RF((om(p.a(1)) * om((q * s.g).inverse())).scaled(a0 * p.a(2) * p.a(3) * s.g / p.b(1)));
    L3.coeff[2] = RF((om(p.b(2) * qi) * om(p.b(3) * qi)).scaled(-q * a0 * b0));
  } else {
    L3.coeff[1] = RF(om(p.a(1)).scaled(s.g.inverse()));
    const Poly d = p.surface() == Surface::D5 ? om(p.b(2) * qi) : Poly::constant(1);
    L3.coeff[2] = RF(d.scaled(-q * a0 * b0));
  }
  return L3;
}

// ---------------------------------------------------------------- compatibility

namespace {

/// Linear form in the unknowns u = y(x0/q), v = y(x0).
struct Lin {
  Rational u, v;
  friend Lin operator+(const Lin& a, const Lin& b) { return {a.u + b.u, a.v + b.v}; }
  friend Lin operator*(const Rational& c, const Lin& a) { return {c * a.u, c * a.v}; }
};

Rational coef_at(const RationalFunction& r, const Rational& x) { return r.eval(x); }

}  // namespace

std::array<Rational, 4> compatibility_residual(const ParamSet& p, const State& s, const Rational& x0,
                                               const CompatProbe& probe) {
  const Rational q = p.q();
  const Step next = step_forward(p, s);
  const State sb{next.state.f + probe.df, next.state.g + probe.dg};
  const Rational cc = c0c1(p, s) + probe.dcc;
  const Rational& lam = probe.lambda;

  try {
    const LaxPair lp = lax_pair(p, s, probe.variant);
    const LaxPair lpT = lax_pair(next.params, sb, probe.variant);

    const Lin u{Rational(1), Rational(0)}, v{Rational(0), Rational(1)};
    auto solve_up = [&](const Rational& x, const Lin& ym, const Lin& y0) {
      const auto A = lp.L1.eval(x);
      if (A[2].is_zero()) throw Error(ErrorKind::PoleAtEvaluationPoint, "L1 y(qx) coefficient vanishes");
      return (-A[0] / A[2]) * ym + (-A[1] / A[2]) * y0;
    };
    const Lin y1 = solve_up(x0, u, v);
    const Lin y2 = solve_up(q * x0, v, y1);

    // L2 with C0 = lambda: lambda c4 ybar + c5 y + c6 y(qx) = 0
    auto ybar = [&](const Rational& x, const Lin& y0, const Lin& yq) {
      const auto c = lp.L2.eval(x);
      const Rational d = lam * c[0];
      if (d.is_zero()) throw Error(ErrorKind::PoleAtEvaluationPoint, "L2 ybar coefficient vanishes");
      return (-c[1] / d) * y0 + (-c[2] / d) * yq;
    };
    const Lin ybm = ybar(x0 / q, u, v), yb0 = ybar(x0, v, y1), ybp = ybar(q * x0, y1, y2);

    const auto B = lpT.L1.eval(x0);
    const Lin r1 = B[0] * ybm + B[1] * yb0 + B[2] * ybp;

    const LaxOperator L3 = l3_operator(p, s, sb.f, cc / lam);
    const auto c3 = L3.eval(x0);
    const Lin r2 = c3[0] * v + c3[1] * yb0 + c3[2] * ybm;
    return {r1.u, r1.v, r2.u, r2.v};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DivisionByZero) throw Error(ErrorKind::PoleAtEvaluationPoint, e.what());
    throw;
  }
}

// ---------------------------------------------------------------- orbits

Orbit orbit(const ParamSet& p, const State& s, int steps) {
  Orbit o;
  o.rows.push_back({0, p, s});
  const int dir = steps >= 0 ? 1 : -1;
  for (int k = 0; k != steps; k += dir) {
    const auto& last = o.rows.back();
    try {
      const Step st = dir > 0 ? step_forward(last.params, last.state) : step_backward(last.params, last.state);
      o.rows.push_back({k + dir, st.params, st.state});
    } catch (const Error& e) {
      o.failed_step = k;
      o.error = e.what();
      break;
    }
  }
  return o;
}

std::string orbit_tsv(const Orbit& o, int decimals) {
  std::ostringstream os;
  os << "step\tparams\tf\tg";
  if (decimals > 0) os << "\tf_decimal\tg_decimal";
  os << "\n";
  for (const auto& r : o.rows) {
    os << r.step << "\t" << r.params.inline_str() << "\t" << r.state.f << "\t" << r.state.g;
    if (decimals > 0) os << "\t" << r.state.f.decimal(decimals) << "\t" << r.state.g.decimal(decimals);
    os << "\n";
  }
  if (o.failed_step) os << "# StepSingular at step " << *o.failed_step << ": " << o.error << "\n";
  return os.str();
}

}  // namespace qpade
