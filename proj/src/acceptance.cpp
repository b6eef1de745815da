#include "qpade/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "qpade/contiguity.hpp"
#include "qpade/error.hpp"
#include "qpade/pade.hpp"
#include "qpade/painleve.hpp"

namespace qpade {

namespace {

constexpr int kSeeds = 5;
constexpr int kDepth = 16;
constexpr std::size_t kMaxFailures = 6;

struct Ctx {
  const AcceptanceConfig& cfg;
  CriterionResult& r;

  std::vector<Surface> surfaces() const {
    if (cfg.only) return {*cfg.only};
    return {std::begin(kAllSurfaces), std::end(kAllSurfaces)};
  }
  ParamSampler sampler(Surface s, int salt = 0) const {
    return ParamSampler(cfg.seed * 1000003ULL + static_cast<std::uint64_t>(r.id) * 7919ULL +
                        static_cast<std::uint64_t>(s) * 131ULL + static_cast<std::uint64_t>(salt));
  }
  bool canonical() const { return cfg.variant == FormulaVariant::Canonical; }
  bool includes(Surface s) const { return !cfg.only || *cfg.only == s; }

  void fail(const std::string& what) {
    r.pass = false;
    if (r.failures.size() < kMaxFailures) r.failures.push_back(what);
  }
  void check(bool ok, const std::function<std::string()>& what) {
    ++r.cases;
    if (!ok) fail(what());
  }
  /// Runs one case; any library error counts as a failure of that case.
  void run(const std::string& label, const std::function<bool()>& body) {
    ++r.cases;
    try {
      if (!body()) fail(label);
    } catch (const std::exception& e) {
      fail(label + ": " + e.what());
    }
  }
};

std::string tag(Surface s, int m, int n, int seed) {
  std::ostringstream os;
  os << surface_name(s) << " m=" << m << " n=" << n << " draw=" << seed;
  return os.str();
}

template <class Fn>
void over_grid(Ctx& c, int max_deg, Fn&& fn) {
  for (Surface s : c.surfaces()) {
    auto smp = c.sampler(s);
    for (int m = 0; m <= max_deg; ++m) {
      for (int n = 0; n <= max_deg; ++n) {
        for (int k = 0; k < kSeeds; ++k) fn(s, m, n, k, smp.draw_params(s, m, n, kDepth));
      }
    }
  }
}

// 1
void pade_condition(Ctx& c) {
  over_grid(c, 4, [&](Surface s, int m, int n, int k, const ParamSet& p) {
    const auto g = p.generating();
    c.run(tag(s, m, n, k), [&] {
      const auto a = build_PQ(g, m, n);
      const auto y = generating_series(g, m + n);
      bool ok = verify_pade(a).ok && verify_pade(build_PQ_single_det(g, m, n)).ok &&
                verify_pade(pade_linear_solve(g, m, n)).ok;
      for (int j = m + 1; j <= m + n; ++j) {
        std::vector<int> seq(n, m);
        seq.push_back(j);
        ok = ok && jacobi_trudi(seq, y.coeffs()).is_zero();
      }
      return ok;
    });
  });
  c.r.notes.push_back("Y*Q - P vanishes through x^{m+n} for all three constructions; s_(m^n,k) = 0 for m < k <= m+n");
}

// 2
void construction_equivalence(Ctx& c) {
  over_grid(c, 4, [&](Surface s, int m, int n, int k, const ParamSet& p) {
    const auto g = p.generating();
    c.run(tag(s, m, n, k), [&] {
      const auto a = build_PQ(g, m, n);
      const auto b = build_PQ_single_det(g, m, n);
      const auto l = pade_linear_solve(g, m, n);
      return a.P == b.P && a.Q == b.Q && proportionality(l, a).has_value();
    });
  });
}

// 3
void coefficient_identities(Ctx& c) {
  constexpr int kMax = 12;
  for (Surface s : c.surfaces()) {
    auto smp = c.sampler(s);
    for (int k = 0; k < kSeeds; ++k) {
      const auto g = smp.draw_free_params(s, kDepth).generating();
      const auto y = generating_series(g, kMax);
      for (int j = 0; j <= kMax; ++j) {
        const Rational v = pk_closed_form(g, j, c.cfg.variant);
        c.check(v == y.coeff(j), [&] {
          return std::string(surface_name(s)) + " closed-form mismatch at k=" + std::to_string(j) + ": " + v.str() +
                 " vs series " + y.coeff(j).str();
        });
      }
      if (s == Surface::E6 || s == Surface::D5) {
        c.run(std::string(surface_name(s)) + " product vs exponential route draw=" + std::to_string(k),
              [&] { return tsuda_series(g, kMax) == y; });
      }
    }
  }
  if (c.canonical() && c.includes(Surface::A21)) {
    auto smp = c.sampler(Surface::A21, 1);
    const auto g = smp.draw_free_params(Surface::A21, kDepth).generating();
    const Rational lit = pk_closed_form(g, 1, FormulaVariant::Literal);
    const Rational ser = generating_series(g, 1).coeff(1);
    const bool mismatch = lit != ser;
    c.check(mismatch, [] { return std::string("literal A21 prefactor (a2;q)_k unexpectedly matched at k=1"); });
    c.r.notes.push_back("documented discrepancy: literal A21 prefactor (a2;q)_k fails at k=1 (closed form " +
                        lit.str() + ", series " + ser.str() + "); canonical prefactor a2^k is used");
  }
}

// 4
void casorati_shapes(Ctx& c) {
  over_grid(c, 3, [&](Surface s, int m, int n, int k, const ParamSet& p) {
    const auto g = p.generating();
    c.run(tag(s, m, n, k), [&] {
      const auto cs = casorati(g, m, n, casorati_order(s, m, n));
      const auto fd = extract_factors(cs, c.cfg.variant);
      const auto sf = special_fg(g, m, n, c.cfg.variant);
      if (sf.f != fd.f) throw Error(ErrorKind::ShapeViolation, "determinant formula f differs from extracted f");
      if (sf.g != fd.g) throw Error(ErrorKind::ShapeViolation, "determinant formula g differs from extracted g");
      return true;
    });
  });
  if (!c.canonical()) return;
  for (Surface s : {Surface::D5, Surface::A4, Surface::A21}) {
    if (!c.includes(s)) continue;
    auto smp = c.sampler(s, 1);
    const auto g = smp.draw_params(s, 1, 1, kDepth).generating();
    const auto fd = extract_factors(casorati(g, 1, 1, casorati_order(s, 1, 1)));
    const Rational lit = special_fg(g, 1, 1, FormulaVariant::Literal).g;
    c.r.notes.push_back("documented discrepancy: literal " + std::string(surface_name(s)) +
                        " g prefactor gives g_literal/g = " + (lit / fd.g).str() + " at m=n=1");
  }
  if (c.includes(Surface::A4)) {
    auto smp = c.sampler(Surface::A4, 2);
    const auto g = smp.draw_params(Surface::A4, 1, 1, kDepth).generating();
    try {
      extract_factors(casorati(g, 1, 1, casorati_order(Surface::A4, 1, 1)), FormulaVariant::Literal);
      c.r.notes.push_back("literal A4 D3 shape unexpectedly held");
    } catch (const Error& e) {
      c.r.notes.push_back(std::string("documented discrepancy: literal A4 D3 shape without (1-b1 x): ") + e.what());
    }
  }
}

// 5
void contiguity(Ctx& c) {
  const std::array<Rational, 3> scales = {Rational(3, 2), Rational(-5, 7), Rational(11, 3)};
  over_grid(c, 3, [&](Surface s, int m, int n, int k, const ParamSet& p) {
    const auto g = p.generating();
    c.run(tag(s, m, n, k), [&] {
      const auto cd = contiguity_data(g, m, n);
      const auto ops = assemble_L2_L3(cd);
      const auto& cs = cd.cs;
      for (const auto* op : {&ops.L2, &ops.L3}) {
        if (!op->apply(cs.y1, cs.y1bar, g.q).is_zero() || !op->apply(cs.y2, cs.y2bar, g.q).is_zero()) {
          throw Error(ErrorKind::ShapeViolation, op == &ops.L2 ? "L2 residual" : "L3 residual");
        }
      }
      if (cd.c0c1() != c0c1(p, State{cd.fd.f, cd.fd.g})) throw Error(ErrorKind::ShapeViolation, "C0C1 formula");
      const auto rs = contiguity_data(g, m, n, scales);
      if (rs.c0c1() != cd.c0c1() || rs.fd.f != cd.fd.f || rs.fd.g != cd.fd.g) {
        throw Error(ErrorKind::ShapeViolation, "not invariant under Pade-pair rescaling");
      }
      if (rs.C0 == cd.C0) throw Error(ErrorKind::ShapeViolation, "rescaling did not move C0");
      return true;
    });
  });
}

// 6
void special_dynamics(Ctx& c) {
  over_grid(c, 3, [&](Surface s, int m, int n, int k, const ParamSet& p) {
    const auto g = p.generating();
    c.run(tag(s, m, n, k), [&] {
      const auto sf = special_fg(g, m, n);
      const auto sfT = special_fg(g.shifted(), m, n);
      const State st{sf.f, sf.g}, stT{sfT.f, sfT.g};
      const auto res = evolution_residuals(p, st, stT);
      if (!res[0].is_zero() || !res[1].is_zero()) throw Error(ErrorKind::ShapeViolation, "evolution equations");
      const auto next = step_forward(p, st);
      return next.state == stT && next.params == p.shifted();
    });
  });
}

// 7
void compatibility(Ctx& c) {
  constexpr int kSamples = 20;
  const FormulaVariant v = c.cfg.variant;
  for (Surface s : c.surfaces()) {
    auto smp = c.sampler(s);
    int done = 0, skipped = 0;
    while (done < kSamples) {
      const auto p = smp.draw_free_params(s, kDepth);
      const State st{smp.draw(), smp.draw()};
      const Rational x0 = smp.draw();
      std::array<Rational, 4> base;
      try {
        base = compatibility_residual(p, st, x0, {.variant = v});
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::PoleAtEvaluationPoint || e.kind() == ErrorKind::StepSingular) {
          ++skipped;
          continue;
        }
        throw;
      }
      ++done;
      auto zero = [](const std::array<Rational, 4>& a) {
        for (const auto& x : a) {
          if (!x.is_zero()) return false;
        }
        return true;
      };
      const std::string label = std::string(surface_name(s)) + " sample " + std::to_string(done);
      c.check(zero(base), [&] { return label + ": residual nonzero"; });
      c.run(label + " probes", [&] {
        CompatProbe pf{.df = Rational(1), .variant = v}, pg{.dg = Rational(1), .variant = v},
            pc{.dcc = Rational(1), .variant = v}, pl{.lambda = Rational(-3, 4), .variant = v};
        return !zero(compatibility_residual(p, st, x0, pf)) && !zero(compatibility_residual(p, st, x0, pg)) &&
               !zero(compatibility_residual(p, st, x0, pc)) && zero(compatibility_residual(p, st, x0, pl));
      });
    }
    if (skipped) c.r.notes.push_back(std::string(surface_name(s)) + ": redrew " + std::to_string(skipped) + " samples at poles");
  }
  over_grid(c, 3, [&](Surface s, int m, int n, int k, const ParamSet& p) {
    if (k > 1) return;
    const auto g = p.generating();
    c.run(tag(s, m, n, k) + " L1 on Pade solutions", [&] {
      const auto cd = contiguity_data(g, m, n);
      const auto lp = lax_pair(p, State{cd.fd.f, cd.fd.g}, v);
      const int N = casorati_order(s, m, n);
      return lp.L1.apply(cd.cs.y1, cd.cs.y1bar, g.q, N).is_zero() && lp.L1.apply(cd.cs.y2, cd.cs.y2bar, g.q, N).is_zero();
    });
  });
  if (!c.canonical()) return;
  for (Surface s : {Surface::A4, Surface::A21}) {
    if (!c.includes(s)) continue;
    auto smp = c.sampler(s, 1);
    const auto p = smp.draw_free_params(s, kDepth);
    const State st{smp.draw(), smp.draw()};
    try {
      const auto r = compatibility_residual(p, st, smp.draw(), {.variant = FormulaVariant::Literal});
const bool zero = r[0].is_zero() && r[1].is_zero() && r[2].is_zero() && r[3].is_zero();
      c.r.notes.push_back("documented discrepancy: literal " + std::string(surface_name(s)) +
                          " L1 constant term (g-1)(q a0 b0 - 1) gives " + (zero ? "a zero" : "a nonzero") +
                          " compatibility residual");
    } catch (const Error&) {
    }
  }
}

// 8
void base_point_certification(Ctx& c) {
  for (Surface s : c.surfaces()) {
    auto smp = c.sampler(s);
    for (int k = 0; k < kSeeds; ++k) {
      const auto p = smp.draw_free_params(s, kDepth);
      const auto pts = base_points(p, c.cfg.variant);
      int mult = 0;
      for (const auto& bp : pts) mult += bp.multiplicity;
      c.check(mult == 8, [&] { return std::string(surface_name(s)) + ": multiplicity count " + std::to_string(mult); });
      for (const auto& bp : pts) {
        c.run(std::string(surface_name(s)) + " " + bp.label, [&] { return certify_base_point(p, bp).certified; });
      }
      for (int j = 0; j < 5; ++j) {
        BasePoint rnd;
        rnd.label = "random";
        rnd.f = smp.draw();
        rnd.g = smp.draw();
        c.check(!probe_base_point(p, rnd).certified, [&] {
          return std::string(surface_name(s)) + ": random point (" + rnd.f->str() + ", " + rnd.g->str() + ") certified";
        });
      }
      for (const auto& bp : pts) {
        if (bp.kind != BasePoint::Kind::Double) continue;
        BasePoint wrong = bp;
        wrong.lead = bp.lead * Rational(2);
        c.check(!probe_base_point(p, wrong).certified,
                [&] { return std::string(surface_name(s)) + ": double point with doubled gradient certified"; });
      }
    }
  }
  if (c.canonical() && c.includes(Surface::E6)) {
    auto smp = c.sampler(Surface::E6, 1);
    const auto p = smp.draw_free_params(Surface::E6, kDepth);
    int failed = 0;
    for (const auto& bp : base_points(p, FormulaVariant::Literal)) failed += !probe_base_point(p, bp).certified;
    c.r.notes.push_back("documented discrepancy: " + std::to_string(failed) +
                        " of the literal E6 points (1/a2, a2), ... are not indeterminacy points; (a2, 1/a2), ... are");
  }
}

// 9
void round_trip(Ctx& c) {
  constexpr int kStates = 20;
  for (Surface s : c.surfaces()) {
    auto smp = c.sampler(s);
    int done = 0;
    while (done < kStates) {
      const auto p = smp.draw_free_params(s, kDepth);
      const State st{smp.draw(), smp.draw()};
      std::optional<Step> fwd;
      try {
        fwd = step_forward(p, st);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::StepSingular) continue;
        throw;
      }
      ++done;
      c.run(std::string(surface_name(s)) + " state " + std::to_string(done), [&] {
        const auto back = step_backward(fwd->params, fwd->state);
        return back.state == st && back.params == p;
      });
    }
  }
  if (!c.includes(Surface::E6)) return;
  auto smp = c.sampler(Surface::E6, 1);
  for (int k = 0; k < kSeeds; ++k) {
    const auto p = smp.draw_free_params(Surface::E6, kDepth);
    const auto o = orbit(p, State{smp.draw(), smp.draw()}, 10);
    c.run("e6 orbit " + std::to_string(k), [&] {
      if (o.failed_step) return true;  // singular orbit: nothing to check beyond the rows produced
      for (const auto& row : o.rows) {
        const auto& q = row.params;
        if (q.a0() * q.a(1) * q.a(2) * q.a(3) != q.b0() * q.b(1) * q.b(2) * q.b(3)) return false;
      }
      return o.rows.size() == 11;
    });
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  struct Entry {
    int id;
    const char* name;
    void (*fn)(Ctx&);
  };
  const Entry entries[] = {
      {1, "pade-condition", pade_condition},
      {2, "construction-equivalence", construction_equivalence},
      {3, "coefficient-identities", coefficient_identities},
      {4, "casorati-shapes", casorati_shapes},
      {5, "contiguity", contiguity},
      {6, "special-solution-dynamics", special_dynamics},
      {7, "compatibility", compatibility},
      {8, "base-points", base_point_certification},
      {9, "map-round-trip", round_trip},
  };
  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    Ctx ctx{cfg, r};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.fn(ctx);
    } catch (const std::exception& ex) {
      ctx.fail(std::string("aborted: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_acceptance(const std::vector<CriterionResult>& results, bool with_timing) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.name << "  (" << r.cases << " checks";
    if (with_timing) os << ", " << std::fixed << std::setprecision(2) << r.seconds << " s";
    os << ")\n";
    for (const auto& n : r.notes) os << "      note: " << n << "\n";
    for (const auto& f : r.failures) os << "      failed: " << f << "\n";
  }
  return os.str();
}

}  // namespace qpade
