#include "qpade/contiguity.hpp"
#include "qpade/painleve.hpp"
#include "support.hpp"

using namespace qpade;
using qpade::test::R;
using qpade::test::throws_kind;

namespace {

GeneratingParams draw(Surface s, int m, int n, std::uint64_t seed) {
  return ParamSampler(seed).draw_params(s, m, n, 16).generating();
}

}  // namespace

TEST_CASE("GKH polynomials") {
  const auto a21 = draw(Surface::A21, 0, 0, 1);
  const auto k = gkh(a21);
  CHECK(k.G_num == Poly::constant(1));
  CHECK(k.G_den == Poly::one_minus(a21.a[0]) * Poly::one_minus(a21.a[1]));
  CHECK(k.K_num == Poly::constant(1));
  CHECK(k.H == k.G_den);
  const auto d5 = draw(Surface::D5, 0, 0, 2);
  CHECK(gkh(d5).K_num == Poly::one_minus(d5.b[0]));
  CHECK(gkh(d5).K_den == Poly::one_minus(d5.a[0]));
  for (Surface s : kAllSurfaces) {
    const auto g = draw(s, 1, 1, 3);
    const auto d = gkh(g);
    const int N = 10;
    const auto y = generating_series(g, N);
    CHECK(d.G_den * y.dilate(g.q) == d.G_num * y);
    CHECK(d.K_den * generating_series(g.shifted(), N) == d.K_num * y);
  }
}

TEST_CASE("Casorati determinants vanish below x^{m+n+1}") {
  for (Surface s : kAllSurfaces) {
    for (auto [m, n] : {std::pair{0, 0}, std::pair{1, 2}, std::pair{3, 1}}) {
      const auto cs = casorati(draw(s, m, n, 4), m, n, casorati_order(s, m, n));
      for (const auto* d : {&cs.D1, &cs.D2, &cs.D3}) {
        REQUIRE(d->first_nonzero().has_value());
        CHECK(*d->first_nonzero() == m + n + 1);
      }
      const auto fd = extract_factors(cs);
      CHECK(cs.D2.coeff(m + n + 1) / cs.D1.coeff(m + n + 1) == fd.c1 / fd.c0);
    }
  }
}

TEST_CASE("A21 at m = n = 0 starts at x^1") {
  const auto g = draw(Surface::A21, 0, 0, 5);
  const auto cs = casorati(g, 0, 0, 6);
  CHECK(*cs.D1.first_nonzero() == 1);
  // P = Q = 1, so D1 = Y(qx) - Y(x) and its x^1 coefficient is (q - 1) p1
  CHECK(cs.D1.coeff(1) == (g.q - R(1)) * cs.Y.coeff(1));
}

TEST_CASE("extracted factors equal the tau formulas") {
  for (Surface s : kAllSurfaces) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        const auto g = draw(s, m, n, 40 + m * 7 + n);
        const auto fd = extract_factors(casorati(g, m, n, casorati_order(s, m, n)));
        const auto sf = special_fg(g, m, n);
        CHECK(sf.f == fd.f);
        CHECK(sf.g == fd.g);
        if (fd.c2) CHECK(fd.g == fd.c1 / *fd.c2);
      }
    }
  }
}

TEST_CASE("m = n = 0 formulas reduce to their prefactors") {
  const auto g = draw(Surface::D5, 0, 0, 6);
  const Rational a1 = g.a[0], a2 = g.a[1], b1 = g.b[0], b2 = g.b[1], one(1);
  CHECK(tau(g, 0, 1) == 1);
  CHECK(tau(g, 1, 0) == 1);
  const Rational ratio = a1 * (one - b1 / a1) * (one - b2 / a1) / (a2 * (one - b1 / a2) * (one - b2 / a2));
  const auto sf = special_fg(g, 0, 0);
  CHECK((one - sf.f / a1) / (one - sf.f / a2) == ratio);
  CHECK(sf.g == -a1 * (one - b1 / a1) / (a2 * (one - b2 / a2)));
}

TEST_CASE("E6 specialization b3 = q^{k-1} a1 a2, a3 = b1 b2") {
  // with m = 2, n = 1 the constraint forces k = m - n + 1 = 2
  const Rational q(3, 7), a1(5, 2), a2(4, 9), b1(7, 5), b2(2, 11);
  const auto p = ParamSet::with_degrees(Surface::E6, q, {a1, a2, b1 * b2}, {b1, b2}, 2, 1);
  CHECK(p.b(3) == q * a1 * a2);
  const auto g = p.generating();
  const auto y = generating_series(g, 10);
  for (int k = 0; k <= 10; ++k) CHECK(pk_closed_form(g, k) == y.coeff(k));
  const auto fd = extract_factors(casorati(g, 2, 1, casorati_order(Surface::E6, 2, 1)));
  const auto sf = special_fg(g, 2, 1);
  CHECK(sf.f == fd.f);
  CHECK(sf.g == fd.g);
}

TEST_CASE("contiguity relations annihilate both Pade solutions") {
  for (Surface s : kAllSurfaces) {
    const auto g = draw(s, 2, 1, 7);
    const auto cd = contiguity_data(g, 2, 1);
    const auto ops = assemble_L2_L3(cd);
    const auto& cs = cd.cs;
    CHECK(ops.L2.apply(cs.y1, cs.y1bar, g.q).is_zero());
    CHECK(ops.L2.apply(cs.y2, cs.y2bar, g.q).is_zero());
    CHECK(ops.L3.apply(cs.y1, cs.y1bar, g.q).is_zero());
    CHECK(ops.L3.apply(cs.y2, cs.y2bar, g.q).is_zero());

    auto broken = ops.L2;
    broken.coeff[0] = Poly::one_minus(cd.fd.f + R(1)).scaled(cd.C0);
    const auto r = broken.apply(cs.y1, cs.y1bar, g.q).first_nonzero();
    REQUIRE(r.has_value());
    CHECK(*r <= 1);
  }
}

TEST_CASE("C0 C1 is gauge invariant and matches its closed form") {
  for (Surface s : kAllSurfaces) {
    const auto p = ParamSampler(8).draw_params(s, 1, 2, 16);
    const auto g = p.generating();
    const auto base = contiguity_data(g, 1, 2);
    const auto scaled = contiguity_data(g, 1, 2, {R(-2, 3), R(5), R(7, 4)});
    CHECK(scaled.C0 != base.C0);
    CHECK(scaled.C1 != base.C1);
    CHECK(scaled.c0c1() == base.c0c1());
    CHECK(scaled.fd.f == base.fd.f);
    CHECK(scaled.fd.g == base.fd.g);
    CHECK(base.c0c1() == c0c1(p, State{base.fd.f, base.fd.g}));
  }
}

TEST_CASE("literal forms fail where documented") {
  const auto a4 = draw(Surface::A4, 1, 1, 9);
  const auto cs = casorati(a4, 1, 1, casorati_order(Surface::A4, 1, 1));
  CHECK(throws_kind([&] { (void)extract_factors(cs, FormulaVariant::Literal); }, ErrorKind::ShapeViolation));
  const auto d5 = draw(Surface::D5, 1, 1, 9);
  CHECK(special_fg(d5, 1, 1, FormulaVariant::Literal).g == -special_fg(d5, 1, 1).g);
  const auto a21 = draw(Surface::A21, 2, 0, 9);
  CHECK(special_fg(a21, 2, 0, FormulaVariant::Literal).g == -special_fg(a21, 2, 0).g);
  const Rational ratio = special_fg(a4, 1, 1, FormulaVariant::Literal).g / special_fg(a4, 1, 1).g;
  CHECK(ratio == -(R(1) - a4.b[0] / a4.a[0]).inverse());
}

TEST_CASE("too small a working order is reported") {
  const auto g = draw(Surface::D5, 1, 1, 10);
  CHECK(throws_kind([&] { (void)extract_factors(casorati(g, 1, 1, 4)); }, ErrorKind::InsufficientCoefficients));
}
