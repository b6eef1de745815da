// qpade: command-line front end for the Pade / contiguity / Painleve checks.
//
// Exit codes: 0 pass, 1 identity failure, 2 invalid input.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpade/acceptance.hpp"
#include "qpade/contiguity.hpp"
#include "qpade/error.hpp"
#include "qpade/pade.hpp"
#include "qpade/painleve.hpp"
#include "qpade/params.hpp"

using namespace qpade;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kDepth = 16;

struct RunConfig {
  std::string surface;
  int m = 1;
  int n = 1;
  std::uint64_t seed = 1;
  std::optional<int> order;
  std::string params_file;
  std::string out_file;
  bool literal = false;
  int steps = 10;
  int decimals = 0;
  std::string f, g, x0;
};

struct InvalidInput {
  std::string what;
};

FormulaVariant variant_of(const RunConfig& c) {
  return c.literal ? FormulaVariant::Literal : FormulaVariant::Canonical;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput{"cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& c, const std::string& text) {
  std::cout << text;
  if (c.out_file.empty()) return;
  std::ofstream out(c.out_file);
  if (!out) throw InvalidInput{"cannot write " + c.out_file};
  out << text;
}

// Explicit parameters from --params, otherwise a seeded draw. `need_degrees` asks for integer (m, n).
ParamSet load_params(const RunConfig& c, bool need_degrees) {
  if (!c.params_file.empty()) {
    ParamSet p = ParamSet::parse(read_file(c.params_file));
    if (!c.surface.empty() && parse_surface(c.surface) != p.surface()) {
      throw InvalidInput{"--surface disagrees with the surface in " + c.params_file};
    }
    if (need_degrees && !p.m()) throw InvalidInput{"this command needs integer m, n in the parameter file"};
    p.validate(kDepth);
    return p;
  }
  if (c.surface.empty()) throw InvalidInput{"--surface or --params is required"};
  const Surface s = parse_surface(c.surface);
  ParamSampler smp(c.seed);
  return need_degrees ? smp.draw_params(s, c.m, c.n, kDepth) : smp.draw_free_params(s, kDepth);
}

// ---------------------------------------------------------------- verify

struct Identity {
  std::string name;
  bool pass = false;
  std::string detail;
};

class Checks {
 public:
  void run(const std::string& name, const std::function<std::string()>& fn) {
    Identity id{name, false, ""};
    try {
      id.detail = fn();
      id.pass = true;
    } catch (const Error& e) {
      id.detail = e.what();
    } catch (const Failure& f) {
      id.detail = f.what;
    }
    list.push_back(id);
  }
  void skip(const std::string& name, const std::string& dep) {
    list.push_back({name, false, "not run: depends on " + dep});
  }
  bool all() const {
    for (const auto& i : list) {
      if (!i.pass) return false;
    }
    return true;
  }

  struct Failure {
    std::string what;
  };
  std::vector<Identity> list;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Checks::Failure{what};
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

int cmd_verify(const RunConfig& c) {
  const ParamSet p = load_params(c, true);
  const int m = *p.m(), n = *p.n();
  const auto g = p.generating();
  const auto var = variant_of(c);
  const int N = c.order.value_or(casorati_order(p.surface(), m, n));
  if (N < m + n + 1) throw InvalidInput{"--order must be at least m + n + 1"};

  Json js;
  js["command"] = "verify";
  js["surface"] = std::string(surface_name(p.surface()));
  js["m"] = m;
  js["n"] = n;
  js["seed"] = c.seed;
  js["variant"] = c.literal ? "literal" : "canonical";
  js["order"] = N;
  js["params"] = p.inline_str();

  std::ostringstream os;
  os << "qpade verify\n";
  os << "surface  " << surface_name(p.surface()) << "\n";
  os << "m n      " << m << " " << n << "\n";
  os << "seed     " << c.seed << (c.params_file.empty() ? "" : " (unused, explicit parameters)") << "\n";
  os << "variant  " << (c.literal ? "literal" : "canonical") << "\n";
  os << "order    " << N << "\n";
  os << "params   " << p.inline_str() << "\n\n";

  const Rational t00 = tau(g, m, n), t10 = tau(g, m + 1, n), t01 = tau(g, m, n + 1);
  os << "tau\n";
  os << "  tau(m, n)     = " << t00 << "\n";
  os << "  tau(m+1, n)   = " << t10 << "\n";
  os << "  tau(m, n+1)   = " << t01 << "\n";
  if (m == 0 && n == 0) {
    const auto pq0 = build_PQ(g, 0, 0);
    os << "  collapse: tau(0, 0) = " << t00 << ", P = " << pq0.P.str() << ", Q = " << pq0.Q.str() << "\n";
  }
  os << "\n";
  js["tau"] = {{"m,n", t00.str()}, {"m+1,n", t10.str()}, {"m,n+1", t01.str()}};

  Checks ck;
  std::optional<PadePair> pq;
  ck.run("pade.schur", [&] {
    pq = build_PQ(g, m, n);
    const auto r = verify_pade(*pq, N - (m + n + 1));
    require(r.ok, r.str());
    return r.str();
  });
  if (pq) {
    ck.run("pade.single_det", [&] {
      require(proportionality(build_PQ_single_det(g, m, n), *pq).has_value(), "not proportional to the Schur pair");
      return std::string("proportional to the Schur pair");
    });
    ck.run("pade.linear_solve", [&] {
      require(proportionality(pade_linear_solve(g, m, n), *pq).has_value(), "not proportional to the Schur pair");
      return std::string("proportional to the Schur pair");
    });
  } else {
    ck.skip("pade.single_det", "pade.schur");
    ck.skip("pade.linear_solve", "pade.schur");
  }
  ck.run("pade.shifted", [&] {
    const auto r = verify_pade(build_PQ(g.shifted(), m, n), N - (m + n + 1));
    require(r.ok, r.str());
    return r.str();
  });

  std::optional<FactorData> fd;
  ck.run("casorati.shapes", [&] {
    fd = extract_factors(casorati(g, m, n, N), var);
    return "D1, D2, D3 factor as claimed through " + std::to_string(fd->checked_terms) + " terms";
  });
  std::optional<ContiguityData> cd;
  if (fd) {
    ck.run("fg.tau_formulas", [&] {
      const auto sf = special_fg(g, m, n, var);
      require(sf.f == fd->f, "f from tau = " + sf.f.str() + ", extracted " + fd->f.str());
      require(sf.g == fd->g, "g from tau = " + sf.g.str() + ", extracted " + fd->g.str());
      return std::string("extracted (f, g) equal the tau expressions");
    });
    ck.run("contiguity.L2_L3", [&] {
      cd = contiguity_data(g, m, n, {Rational(1), Rational(1), Rational(1)}, var);
      const auto ops = assemble_L2_L3(*cd);
      const auto& cs = cd->cs;
      for (const auto* op : {&ops.L2, &ops.L3}) {
        require(op->apply(cs.y1, cs.y1bar, g.q).is_zero() && op->apply(cs.y2, cs.y2bar, g.q).is_zero(),
                op == &ops.L2 ? "L2 leaves a residual" : "L3 leaves a residual");
      }
      return std::string("both relations annihilate y1 and y2");
    });
  } else {
    ck.skip("fg.tau_formulas", "casorati.shapes");
    ck.skip("contiguity.L2_L3", "casorati.shapes");
  }
  if (cd) {
    ck.run("lax.L1", [&] {
      const auto lp = lax_pair(p, State{fd->f, fd->g}, var);
      const auto& cs = cd->cs;
      const bool ok = lp.L1.apply(cs.y1, cs.y1bar, g.q, N).is_zero() && lp.L1.apply(cs.y2, cs.y2bar, g.q, N).is_zero();
      require(ok, "L1 leaves a residual on the Pade solutions");
      return std::string("L1 annihilates y1 and y2");
    });
    ck.run("lax.c0c1", [&] {
      const Rational cc = c0c1(p, State{fd->f, fd->g});
      require(cc == cd->c0c1(), "C0*C1 = " + cd->c0c1().str() + ", formula gives " + cc.str());
      return "C0*C1 = " + cc.str();
    });
    ck.run("step.special", [&] {
      const auto next = step_forward(p, State{fd->f, fd->g});
      require(next.state == State{cd->fdT.f, cd->fdT.g}, "T(f, g) differs from the shifted extraction");
      return "T(f, g) = (" + next.state.f.str() + ", " + next.state.g.str() + ")";
    });
  } else {
    for (const char* name : {"lax.L1", "lax.c0c1", "step.special"}) ck.skip(name, "contiguity.L2_L3");
  }
  if (fd) {
    ck.run("compat.residual", [&] {
      const Rational x0(3, 17);
      const auto r = compatibility_residual(p, State{fd->f, fd->g}, x0, CompatProbe{.variant = var});
      for (const auto& v : r) require(v.is_zero(), "nonzero residual " + v.str() + " at x0 = 3/17");
      return std::string("zero at x0 = 3/17");
    });
  } else {
    ck.skip("compat.residual", "casorati.shapes");
  }

  os << "identities\n";
  Json ids = Json::array();
  int passed = 0;
  for (const auto& id : ck.list) {
    passed += id.pass;
    os << "  " << (id.pass ? "PASS  " : "FAIL  ") << pad(id.name, 20) << id.detail << "\n";
    ids.push_back({{"name", id.name}, {"pass", id.pass}, {"detail", id.detail}});
  }
  os << "\n";
  js["identities"] = ids;

  if (fd) {
    os << "extracted\n";
    os << "  f  = " << fd->f << "\n  g  = " << fd->g << "\n  c0 = " << fd->c0 << "\n  c1 = " << fd->c1 << "\n";
    if (fd->c2) os << "  c2 = " << *fd->c2 << "\n";
    Json ex = {{"f", fd->f.str()}, {"g", fd->g.str()}, {"c0", fd->c0.str()}, {"c1", fd->c1.str()}};
    if (fd->c2) ex["c2"] = fd->c2->str();
    if (cd) {
      os << "  C0 = " << cd->C0 << "\n  C1 = " << cd->C1 << "\n";
      ex["C0"] = cd->C0.str();
      ex["C1"] = cd->C1.str();
    }
    os << "\n";
    js["extracted"] = ex;
  }

  const bool ok = ck.all();
  js["passed"] = passed;
  js["total"] = ck.list.size();
  js["pass"] = ok;
  os << "summary  " << passed << "/" << ck.list.size() << " identities pass\n\n";
  os << "--- json ---\n" << js.dump(2) << "\n";
  emit(c, os.str());
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- solutions

int cmd_solutions(const RunConfig& c) {
  const ParamSet p = load_params(c, true);
  const int m = *p.m(), n = *p.n();
  const auto g = p.generating();
  const auto pq = build_PQ(g, m, n);
  const auto sf = special_fg(g, m, n, variant_of(c));
  const auto rep = verify_pade(pq);

  std::ostringstream os;
  os << "qpade solutions\n";
  os << "params  " << p.inline_str() << "\n";
  os << "tau     " << tau(g, m, n) << "\n";
  os << "P(x)    " << pq.P.str() << "\n";
  os << "Q(x)    " << pq.Q.str() << "\n";
  os << "pade    " << rep.str() << "\n";
  os << "f       " << sf.f << "\n";
  os << "g       " << sf.g << "\n\n";
  Json js = {{"command", "solutions"}, {"params", p.inline_str()}, {"tau", tau(g, m, n).str()},
             {"P", pq.P.str()},        {"Q", pq.Q.str()},          {"pade_ok", rep.ok},
             {"f", sf.f.str()},        {"g", sf.g.str()}};
  os << "--- json ---\n" << js.dump(2) << "\n";
  emit(c, os.str());
  return rep.ok ? 0 : 1;
}

// ---------------------------------------------------------------- orbit

int cmd_orbit(const RunConfig& c) {
  const bool explicit_state = !c.f.empty() || !c.g.empty();
  if (explicit_state && (c.f.empty() || c.g.empty())) throw InvalidInput{"--f and --g must be given together"};
  const ParamSet p = load_params(c, !explicit_state);
  State s{Rational(0), Rational(0)};
  if (explicit_state) {
    s = State{Rational::parse(c.f), Rational::parse(c.g)};
  } else {
    const auto sf = special_fg(p.generating(), *p.m(), *p.n(), variant_of(c));
    s = State{sf.f, sf.g};
  }
  const auto o = orbit(p, s, c.steps);
  emit(c, orbit_tsv(o, c.decimals));
  if (o.failed_step) {
    std::cerr << "StepSingular at step " << *o.failed_step << ": " << o.error << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------- compat

int cmd_compat(const RunConfig& c) {
  const ParamSet p = load_params(c, false);
  ParamSampler smp(c.seed + 1);
  const State s{c.f.empty() ? smp.draw() : Rational::parse(c.f), c.g.empty() ? smp.draw() : Rational::parse(c.g)};
  const Rational x0 = c.x0.empty() ? smp.draw() : Rational::parse(c.x0);
  const auto var = variant_of(c);

  std::ostringstream os;
  Json js = {{"command", "compat"}, {"params", p.inline_str()}, {"f", s.f.str()}, {"g", s.g.str()}, {"x0", x0.str()}};
  os << "qpade compat\n";
  os << "params  " << p.inline_str() << "\n";
  os << "state   f = " << s.f << ", g = " << s.g << "\n";
  os << "x0      " << x0 << "\n\n";

  bool ok = true;
  const auto r = compatibility_residual(p, s, x0, CompatProbe{.variant = var});
  os << "residual\n";
  Json jr = Json::array();
  for (const auto& v : r) {
    ok = ok && v.is_zero();
    os << "  " << v << "\n";
    jr.push_back(v.str());
  }
  js["residual"] = jr;

  os << "\nbase points\n";
  Json jb = Json::array();
  for (const auto& bp : base_points(p, var)) {
    const auto rep = probe_base_point(p, bp);
    ok = ok && rep.certified;
    os << "  " << (rep.certified ? "PASS  " : "FAIL  ") << pad(bp.label, 28) << rep.map << "  " << rep.detail << "\n";
    jb.push_back({{"label", bp.label}, {"certified", rep.certified}, {"map", rep.map}, {"detail", rep.detail}});
  }
  js["base_points"] = jb;
  js["pass"] = ok;
  os << "\n--- json ---\n" << js.dump(2) << "\n";
  emit(c, os.str());
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- selfcheck

int cmd_selfcheck(const RunConfig& c) {
  AcceptanceConfig ac;
  if (!c.surface.empty()) ac.only = parse_surface(c.surface);
  ac.variant = variant_of(c);
  ac.seed = c.seed;
  const auto results = run_acceptance(ac);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  std::cout << format_acceptance(results, true);
  std::cout << (ok ? "all criteria passed\n" : "some criteria failed\n");
  if (!c.out_file.empty()) {
    std::ofstream out(c.out_file);
    if (!out) throw InvalidInput{"cannot write " + c.out_file};
    out << format_acceptance(results, false);
  }
  return ok ? 0 : 1;
}

bool is_input_error(ErrorKind k) {
  return k == ErrorKind::InvalidInput || k == ErrorKind::DegenerateParameters;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Pade approximants of q-hypergeometric series and q-Painleve equations"};
  app.require_subcommand(1, 1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--surface", c.surface, "e6, d5, a4 or a21")
        ->check(CLI::IsMember({"e6", "d5", "a4", "a21"}, CLI::ignore_case));
    sub->add_option("--seed", c.seed, "seed for parameter draws");
    sub->add_option("--params", c.params_file, "explicit parameters, key = value per line");
    sub->add_option("--out", c.out_file, "also write the report to this file");
    sub->add_flag("--literal-forms", c.literal, "use the uncorrected literal formulas");
  };
  auto degrees = [&](CLI::App* sub) {
    sub->add_option("--m", c.m, "degree of P")->check(CLI::NonNegativeNumber);
    sub->add_option("--n", c.n, "degree of Q")->check(CLI::NonNegativeNumber);
  };

  auto* verify = app.add_subcommand("verify", "run the identity suite for one (m, n)");
  common(verify);
  degrees(verify);
  verify->add_option("--order", c.order, "working series order for the Casorati checks");

  auto* solutions = app.add_subcommand("solutions", "print the Pade pair and the special (f, g)");
  common(solutions);
  degrees(solutions);

  auto* orb = app.add_subcommand("orbit", "iterate the evolution map and export rows as TSV");
  common(orb);
  degrees(orb);
  orb->add_option("--steps", c.steps, "number of steps, negative runs backwards");
  orb->add_option("--f", c.f, "initial f (default: the special solution)");
  orb->add_option("--g", c.g, "initial g");
  orb->add_option("--decimals", c.decimals, "add decimal columns with this many digits")->check(CLI::Range(0, 60));

  auto* compat = app.add_subcommand("compat", "Lax compatibility residual and base point certification");
  common(compat);
  compat->add_option("--f", c.f, "f (default: drawn from the seed)");
  compat->add_option("--g", c.g, "g");
  compat->add_option("--x0", c.x0, "evaluation point");

  auto* self = app.add_subcommand("selfcheck", "run the acceptance criteria");
  common(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (auto& ch : c.surface) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));

  try {
    if (verify->parsed()) return cmd_verify(c);
    if (solutions->parsed()) return cmd_solutions(c);
    if (orb->parsed()) return cmd_orbit(c);
    if (compat->parsed()) return cmd_compat(c);
    return cmd_selfcheck(c);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << (is_input_error(e.kind()) ? "invalid input: " : "error: ") << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  }
}
