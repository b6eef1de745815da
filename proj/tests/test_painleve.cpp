#include "qpade/laurent.hpp"
#include "qpade/painleve.hpp"
#include "support.hpp"

using namespace qpade;
using qpade::test::R;
using qpade::test::throws_kind;

namespace {

bool all_zero(const std::array<Rational, 4>& r) {
  for (const auto& x : r) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Laurent expansions") {
  const Laurent e = Laurent::eps();
  CHECK((R(1) / e).limit().infinite);
  CHECK((e * R(3)).limit().value == 0);
  CHECK(((R(2) + e) / (R(1) - e)).limit().value == 2);
  // (e + e^2) / (e - e^3) -> 1
  CHECK(((e + e * e) / (e - e * e * e)).limit().value == 1);
  // ((1 + e)^2 - 1 - 2e) / e^2 = 1
  const Laurent num = (R(1) + e) * (R(1) + e) - R(1) - R(2) * e;
  CHECK((num / (e * e)).limit().value == 1);
  CHECK(throws_kind([&] { (void)(R(1) / (e - e)); }, ErrorKind::CertificationFailed));
}

TEST_CASE("forward and backward steps are inverse") {
  for (Surface s : kAllSurfaces) {
    ParamSampler smp(30 + static_cast<int>(s));
    int done = 0;
    while (done < 20) {
      const auto p = smp.draw_free_params(s, 12);
      const State st{smp.draw(), smp.draw()};
      try {
        const auto fwd = step_forward(p, st);
        const auto back = step_backward(fwd.params, fwd.state);
        CHECK(back.state == st);
        CHECK(back.params == p);
        const auto res = evolution_residuals(p, st, fwd.state);
        CHECK(res[0] == 0);
        CHECK(res[1] == 0);
        ++done;
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::StepSingular);
      }
    }
  }
}

TEST_CASE("singular steps") {
  ParamSampler smp(2);
  const auto a21 = smp.draw_free_params(Surface::A21, 12);
  CHECK(throws_kind([&] { (void)step_forward(a21, State{R(3, 4), R(1)}); }, ErrorKind::StepSingular));
  const auto e6 = smp.draw_free_params(Surface::E6, 12);
  CHECK(throws_kind([&] { (void)step_backward(e6, State{e6.a(1), R(5, 3)}); }, ErrorKind::StepSingular));
  CHECK(throws_kind([&] { (void)step_forward(e6, State{R(2, 3), R(3, 2)}); }, ErrorKind::StepSingular));
}

TEST_CASE("E6 backward step solves the first equation for the down-shifted g") {
  const auto p = ParamSampler(3).draw_free_params(Surface::E6, 12);
  const State st{R(7, 5), R(3, 11)};
  const auto back = step_backward(p, st);
  const Rational f = st.f, g = st.g, ug = back.state.g, one(1);
  const Rational rhs = p.b0() * p.b(1) * p.b(1) / (p.a0() * p.a(2) * p.a(2) * p.a(3) * p.a(3)) * (f - p.a(2)) *
                       (f - p.a(3)) * (f - p.b(2)) * (f - p.b(3)) / ((f - p.a(1)) * (f - p.b(1)));
  CHECK((f * g - one) * (f * ug - one) == rhs);
}

TEST_CASE("special solutions are mapped onto special solutions") {
  for (Surface s : kAllSurfaces) {
    for (auto [m, n] : {std::pair{0, 0}, std::pair{1, 2}, std::pair{3, 1}}) {
      const auto p = ParamSampler(50 + m + n).draw_params(s, m, n, 16);
      const auto g = p.generating();
      const auto sf = special_fg(g, m, n), sfT = special_fg(g.shifted(), m, n);
      const auto next = step_forward(p, State{sf.f, sf.g});
      CHECK(next.state == State{sfT.f, sfT.g});
      CHECK(next.params == p.shifted());
    }
  }
}

TEST_CASE("the shared C0 C1 formula") {
  const Rational q(2, 9), a0(3, 5), b0(7, 4), g(5, 13);
  const auto d5 = ParamSet::with_free_a0b0(Surface::D5, q, a0, b0, {R(3), R(4)}, {R(5), R(7)});
  const auto a4 = ParamSet::with_free_a0b0(Surface::A4, q, a0, b0, {R(11), R(4)}, {R(5)});
  const auto a21 = ParamSet::with_free_a0b0(Surface::A21, q, a0, b0, {R(3), R(13)}, {});
  CHECK(c0c1(d5, State{R(1), g}) == c0c1(a4, State{R(2), g}));
  CHECK(c0c1(a4, State{R(1), g}) == c0c1(a21, State{R(1), g}));
  CHECK(throws_kind([&] { (void)c0c1(d5, State{R(1), R(0)}); }, ErrorKind::DivisionByZero));
}

TEST_CASE("base point lists") {
  const auto d5 = ParamSampler(4).draw_free_params(Surface::D5, 12);
  const auto pts = base_points(d5);
  REQUIRE(pts.size() == 8);
  CHECK(pts[0].f == d5.a(1));
  CHECK(pts[0].g == R(0));
  CHECK(pts[2].g == d5.b(1) / (d5.a0() * d5.a(2)));
  CHECK(pts[3].g == d5.a(1) / (d5.b0() * d5.b(2)));
  CHECK(!pts[4].f.has_value());
  CHECK(pts[5].g == (d5.q() * d5.a0() * d5.b0()).inverse());
  CHECK(!pts[7].g.has_value());
  CHECK(pts[7].f == d5.b(2));

  const auto e6 = ParamSampler(5).draw_free_params(Surface::E6, 12);
  int on_curve = 0;
  for (const auto& bp : base_points(e6)) on_curve += bp.f && bp.g && *bp.f * *bp.g == R(1);
  CHECK(on_curve == 4);

  for (Surface s : kAllSurfaces) {
    int mult = 0;
    for (const auto& bp : base_points(ParamSampler(6).draw_free_params(s, 12))) mult += bp.multiplicity;
    CHECK(mult == 8);
  }
}

TEST_CASE("base points certify and random points do not") {
  for (Surface s : kAllSurfaces) {
    ParamSampler smp(60 + static_cast<int>(s));
    const auto p = smp.draw_free_params(s, 12);
    for (const auto& bp : base_points(p)) CHECK_MESSAGE(certify_base_point(p, bp).certified, bp.label);
    for (int k = 0; k < 5; ++k) {
      BasePoint rnd;
      rnd.f = smp.draw();
      rnd.g = smp.draw();
      CHECK(throws_kind([&] { (void)certify_base_point(p, rnd); }, ErrorKind::CertificationFailed));
    }
  }
}

TEST_CASE("D5 (a1, 0) is indeterminate for the down-shifted g") {
  const auto p = ParamSampler(7).draw_free_params(Surface::D5, 12);
  const auto rep = certify_base_point(p, base_points(p)[0]);
  CHECK(rep.map == "ug");
}

TEST_CASE("double points need the exact gradient") {
  const auto p = ParamSampler(8).draw_free_params(Surface::A21, 12);
  for (const auto& bp : base_points(p)) {
    if (bp.kind != BasePoint::Kind::Double) continue;
    CHECK(certify_base_point(p, bp).certified);
    auto wrong = bp;
    wrong.lead = bp.lead * R(3);
    CHECK(!probe_base_point(p, wrong).certified);
  }
}

TEST_CASE("literal E6 points on fg = 1 do not certify") {
  const auto p = ParamSampler(9).draw_free_params(Surface::E6, 12);
  const auto pts = base_points(p, FormulaVariant::Literal);
  for (int i = 0; i < 4; ++i) CHECK(!probe_base_point(p, pts[i]).certified);
}

TEST_CASE("Lax operator coefficients") {
  const auto p = ParamSampler(10).draw_free_params(Surface::E6, 12);
  const State st{R(3, 7), R(5, 2)};
  const auto lp = lax_pair(p, st);
  const Rational x(2, 13), one(1);
  CHECK(lp.L1.coeff[2].eval(x) == (one - p.a(1) * x) * (one - p.a(2) * x) * (one - p.a(3) * x) /
                                      (p.q() * (one - st.f * x)));
}

TEST_CASE("Lax L2 is the contiguity L2 in another gauge") {
  for (Surface s : kAllSurfaces) {
    const int m = 1, n = 2;
    const auto p = ParamSampler(11).draw_params(s, m, n, 16);
    const auto cd = contiguity_data(p.generating(), m, n);
    const auto ops = assemble_L2_L3(cd);
    const auto lp = lax_pair(p, State{cd.fd.f, cd.fd.g});
    const Rational x(3, 17);
    // contiguity order: (ybar, y(qx), y); Lax order: (ybar, y, y(qx))
    CHECK(ops.L2.coeff[0].eval(x) == cd.C0 * lp.L2.coeff[0].eval(x));
    CHECK(ops.L2.coeff[1].eval(x) == lp.L2.coeff[2].eval(x));
    CHECK(ops.L2.coeff[2].eval(x) == lp.L2.coeff[1].eval(x));
  }
}

TEST_CASE("L1 annihilates the Pade solutions") {
  for (Surface s : kAllSurfaces) {
    for (auto [m, n] : {std::pair{0, 0}, std::pair{2, 1}, std::pair{1, 3}}) {
      const auto p = ParamSampler(12 + m).draw_params(s, m, n, 16);
      const auto g = p.generating();
      const auto cd = contiguity_data(g, m, n);
      const auto N = casorati_order(s, m, n);
      const auto lp = lax_pair(p, State{cd.fd.f, cd.fd.g});
      CHECK(lp.L1.apply(cd.cs.y1, cd.cs.y1bar, g.q, N).is_zero());
      CHECK(lp.L1.apply(cd.cs.y2, cd.cs.y2bar, g.q, N).is_zero());
      if (s == Surface::A4 || s == Surface::A21) {
        const auto lit = lax_pair(p, State{cd.fd.f, cd.fd.g}, FormulaVariant::Literal);
        CHECK(!lit.L1.apply(cd.cs.y1, cd.cs.y1bar, g.q, N).is_zero());
      }
    }
  }
}

TEST_CASE("compatibility residual") {
  for (Surface s : kAllSurfaces) {
    ParamSampler smp(70 + static_cast<int>(s));
    const auto p = smp.draw_free_params(s, 12);
    const State st{smp.draw(), smp.draw()};
    const Rational x0 = smp.draw();
    CHECK(all_zero(compatibility_residual(p, st, x0)));
    CHECK(!all_zero(compatibility_residual(p, st, x0, {.df = R(1)})));
    CHECK(!all_zero(compatibility_residual(p, st, x0, {.dg = R(1)})));
    CHECK(!all_zero(compatibility_residual(p, st, x0, {.dcc = R(1)})));
    CHECK(all_zero(compatibility_residual(p, st, x0, {.lambda = R(5, 3)})));
    CHECK(throws_kind([&] { (void)compatibility_residual(p, st, st.f.inverse()); }, ErrorKind::PoleAtEvaluationPoint));
  }
}

TEST_CASE("orbits") {
  const int m = 1, n = 1;
  const auto p = ParamSampler(13).draw_params(Surface::D5, m, n, 16);
  const auto sf = special_fg(p.generating(), m, n);
  const auto o = orbit(p, State{sf.f, sf.g}, 10);
  REQUIRE(!o.failed_step);
  REQUIRE(o.rows.size() == 11);
  for (std::size_t k = 0; k + 1 < o.rows.size(); ++k) {
    const auto r = evolution_residuals(o.rows[k].params, o.rows[k].state, o.rows[k + 1].state);
    CHECK(r[0] == 0);
    CHECK(r[1] == 0);
  }
  const auto f5 = orbit(p, State{sf.f, sf.g}, 5);
  const auto b5 = orbit(f5.rows.back().params, f5.rows.back().state, -5);
  CHECK(b5.rows.back().state == f5.rows.front().state);
  CHECK(b5.rows.back().params == p);

  const auto a21 = ParamSampler(14).draw_free_params(Surface::A21, 12);
  const auto bad = orbit(a21, State{R(2, 3), R(1)}, 4);
  REQUIRE(bad.failed_step.has_value());
  CHECK(*bad.failed_step == 0);
  CHECK(orbit_tsv(bad).find("StepSingular at step 0") != std::string::npos);

  const auto e6 = ParamSampler(15).draw_free_params(Surface::E6, 12);
  for (const auto& row : orbit(e6, State{R(3, 5), R(4, 7)}, 10).rows) {
    const auto& q = row.params;
    CHECK(q.a0() * q.a(1) * q.a(2) * q.a(3) == q.b0() * q.b(1) * q.b(2) * q.b(3));
  }
}

TEST_CASE("orbit export") {
  const auto p = ParamSampler(16).draw_free_params(Surface::A4, 12);
  const auto o = orbit(p, State{R(3, 5), R(4, 7)}, 2);
  const auto tsv = orbit_tsv(o, 6);
  CHECK(tsv.rfind("step\tparams\tf\tg\tf_decimal\tg_decimal\n", 0) == 0);
  CHECK(tsv.find("\n0\t" + p.inline_str() + "\t3/5\t4/7\t0.600000\t0.571429\n") != std::string::npos);
  CHECK(orbit_tsv(o) == orbit_tsv(orbit(p, State{R(3, 5), R(4, 7)}, 2)));
}
