#include "qpade/generating.hpp"
#include "qpade/series.hpp"
#include "support.hpp"

using namespace qpade;
using qpade::test::R;
using qpade::test::throws_kind;

TEST_CASE("series plumbing examples") {
  const TruncSeries onex = TruncSeries::from_poly(Poly({R(1), R(1)}), 3);
  const TruncSeries onemx = TruncSeries::from_poly(Poly({R(1), R(-1)}), 3);
  CHECK(onex.dilate(R(2, 3)) == TruncSeries::from_poly(Poly({R(1), R(2, 3)}), 3));
  CHECK(onemx.inverse() == TruncSeries({R(1), R(1), R(1), R(1)}, 3));
  CHECK((onex * onemx).truncated(2) == TruncSeries({R(1), R(0), R(-1)}, 2));
  CHECK(throws_kind([] { (void)TruncSeries({R(0), R(1)}, 2).inverse(); }, ErrorKind::NonUnitConstantTerm));
}

TEST_CASE("series order bookkeeping") {
  const TruncSeries a({R(1), R(2), R(3)}, 5), b({R(1)}, 2);
  CHECK((a + b).order() == 2);
  CHECK((a * b).order() == 2);
  CHECK(a.inverse().order() == 5);
  CHECK(throws_kind([&] { (void)b.coeff(3); }, ErrorKind::InsufficientCoefficients));
  CHECK(a.shift_up(2).order() == 7);
  CHECK(a.shift_up(2).shift_down(2) == a);
  CHECK(throws_kind([&] { (void)a.shift_down(1); }, ErrorKind::ShapeViolation));
}

TEST_CASE("polynomial arithmetic") {
  const Poly p({R(1), R(-3)}), q({R(2), R(0), R(1)});
  CHECK((p * q).divexact(q) == p);
  CHECK(throws_kind([&] { (void)q.divexact(p); }, ErrorKind::ShapeViolation));
  CHECK(Poly({R(0), R(0)}).degree() == -1);
  CHECK(q.eval(R(2)) == 6);
  CHECK(p.dilate(R(2)) == Poly({R(1), R(-6)}));
}

TEST_CASE("rational functions") {
  const RationalFunction r(Poly({R(1), R(1)}), Poly({R(1), R(-2)}));
  CHECK(r.eval(R(1, 3)) == R(4));
  CHECK(throws_kind([&] { (void)r.eval(R(1, 2)); }, ErrorKind::PoleAtEvaluationPoint));
  CHECK((r * r).eval(R(1, 3)) == 16);
  CHECK((r - r).eval(R(1, 3)) == 0);
  CHECK(r.series(3) == TruncSeries({R(1), R(3), R(6), R(12)}, 3));
}

TEST_CASE("infinite q-product expansions") {
  const Rational a(4, 9), q(3, 5);
  CHECK(qpoch_inf_series(a, q, 1) == TruncSeries({R(1), -a / (R(1) - q)}, 1));
  CHECK(qpoch_inf_inverse_series(a, q, 1) == TruncSeries({R(1), a / (R(1) - q)}, 1));
  CHECK(qpoch_inf_series(a, q, 10) * qpoch_inf_inverse_series(a, q, 10) == TruncSeries::one(10));
}

TEST_CASE("first generating coefficients") {
  ParamSampler s(3);
  for (Surface surf : kAllSurfaces) {
    const auto g = s.draw_free_params(surf, 12).generating();
    const auto y = generating_series(g, 12);
    CHECK(y.coeff(0) == 1);
    CHECK(generating_series(g, 7) == y.truncated(7));
    const Rational q = g.q;
    Rational p1(0);
    for (const auto& b : g.b) p1 += b;
    for (const auto& a : g.a) p1 -= a;
    CHECK(y.coeff(1) == p1 / (R(1) - q));
  }
}

TEST_CASE("closed-form coefficients at k = 1") {
  ParamSampler s(4);
  const auto d5 = s.draw_free_params(Surface::D5, 12).generating();
  CHECK(pk_closed_form(d5, 1) == (d5.b[0] + d5.b[1] - d5.a[0] - d5.a[1]) / (R(1) - d5.q));
  const auto a4 = s.draw_free_params(Surface::A4, 12).generating();
  CHECK(pk_closed_form(a4, 1) == (a4.b[0] - a4.a[0] - a4.a[1]) / (R(1) - a4.q));
  const auto a21 = s.draw_free_params(Surface::A21, 12).generating();
  CHECK(pk_closed_form(a21, 1) == -(a21.a[0] + a21.a[1]) / (R(1) - a21.q));
  for (Surface surf : kAllSurfaces) CHECK(pk_closed_form(s.draw_free_params(surf, 12).generating(), 0) == 1);
}

TEST_CASE("literal A21 prefactor fails at k = 1") {
  ParamSampler s(6);
  const auto g = s.draw_free_params(Surface::A21, 12).generating();
  CHECK(pk_closed_form(g, 1, FormulaVariant::Literal) != generating_series(g, 1).coeff(1));
  CHECK(pk_closed_form(g, 0, FormulaVariant::Literal) == 1);
}

TEST_CASE("closed forms match the series through k = 12") {
  ParamSampler s(8);
  for (Surface surf : kAllSurfaces) {
    for (int t = 0; t < 5; ++t) {
      const auto g = s.draw_free_params(surf, 16).generating();
      const auto y = generating_series(g, 12);
      for (int k = 0; k <= 12; ++k) CHECK(pk_closed_form(g, k) == y.coeff(k));
    }
  }
}

TEST_CASE("exponential route agrees with the product route") {
  ParamSampler s(9);
  for (Surface surf : {Surface::E6, Surface::D5}) {
    for (int t = 0; t < 5; ++t) {
      const auto g = s.draw_free_params(surf, 16).generating();
      CHECK(tsuda_series(g, 12) == generating_series(g, 12));
    }
    CHECK(tsuda_series(s.draw_free_params(surf, 16).generating(), 0).coeff(0) == 1);
  }
  CHECK(throws_kind([&] { (void)tsuda_series(s.draw_free_params(Surface::A4, 16).generating(), 3); },
                    ErrorKind::InvalidInput));
}
