#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qpade/contiguity.hpp"
#include "qpade/generating.hpp"
#include "qpade/params.hpp"
#include "qpade/series.hpp"

namespace qpade {

struct State {
  Rational f, g;
  friend bool operator==(const State&, const State&) = default;
};

struct Step {
  State state;
  ParamSet params;
};

/// One step of the evolution T: fbar from the second equation at the current parameters,
/// then gbar from the first equation at the shifted ones. Throws StepSingular.
Step step_forward(const ParamSet& p, const State& s);
/// Inverse of step_forward: the down-shifted g from the first equation, then f from the
/// second equation at T^{-1} parameters.
Step step_backward(const ParamSet& p, const State& s);

/// Left minus right side of both evolution equations for the pair s -> sbar
/// (the second equation at p, the first at T p).
std::array<Rational, 2> evolution_residuals(const ParamSet& p, const State& s, const State& sbar);

/// The gauge-invariant product C0*C1 as a function of g.
Rational c0c1(const ParamSet& p, const State& s);

/// A singular point of the evolution, in one of three forms:
/// a finite point, a point with f or g at infinity, or a double point given by an eps-family
/// f = eps, g = lead * eps^power + s * eps^{power+1}.
struct BasePoint {
  enum class Kind { Finite, Infinite, Double };
  Kind kind = Kind::Finite;
  std::string label;
  std::optional<Rational> f, g;  ///< nullopt means infinity (Finite/Infinite kinds)
  Rational lead;                 ///< Double kind
  int power = 0;                 ///< Double kind
  int multiplicity = 1;
};

/// The eight singular points, counted with multiplicity. The Literal variant returns the
/// E6 points on fg = 1 in the uncorrected form (1/a2, a2), ...
std::vector<BasePoint> base_points(const ParamSet& p, FormulaVariant variant = FormulaVariant::Canonical);

struct CertificationReport {
  bool certified = false;
  std::string map;     ///< which map is indeterminate ("fbar", "ug", "T", "T^-1")
  std::string detail;  ///< the distinct limits found along the approach family
};

/// Approaches the point along exact eps-families and checks that some map's limit depends on
/// the approach direction (simple points) or on the second-order parameter (double points).
CertificationReport probe_base_point(const ParamSet& p, const BasePoint& pt);
/// As probe_base_point, but throws CertificationFailed when the point does not certify.
CertificationReport certify_base_point(const ParamSet& p, const BasePoint& pt);

/// Three-term operator with rational-function coefficients.
struct LaxOperator {
  std::array<RationalFunction, 3> coeff;
  std::array<Slot, 3> slot;
  TruncSeries apply(const TruncSeries& y, const TruncSeries& ybar, const Rational& q, int order) const;
  std::array<Rational, 3> eval(const Rational& x) const;
};

struct LaxPair {
  LaxOperator L1;  ///< on (y(x/q), y(x), y(qx))
  LaxOperator L2;  ///< on (ybar(x), y(x), y(qx)), C0 absorbed
};

/// The Literal variant uses the uncorrected A4 / A21 L1 constant term (g-1)(q a0 b0 - 1).
LaxPair lax_pair(const ParamSet& p, const State& s, FormulaVariant variant = FormulaVariant::Canonical);

/// L3 in the gauge C0 = 1, C1 = c0c1: on (y(x), ybar(x), ybar(x/q)).
LaxOperator l3_operator(const ParamSet& p, const State& s, const Rational& fbar, const Rational& cc);

struct CompatProbe {
  Rational df, dg, dcc;      ///< perturbations added to fbar, gbar, C0C1
  Rational lambda{1};        ///< split C0 = lambda, C1 = C0C1 / lambda
  FormulaVariant variant = FormulaVariant::Canonical;
};

/// With u = y(x0/q), v = y(x0) free: the u- and v-coefficients of the shifted L1 applied to
/// ybar (entries 0, 1) and of L3 at x0 (entries 2, 3). All vanish when (fbar, gbar) come from
/// step_forward and C0C1 from c0c1. Throws PoleAtEvaluationPoint.
std::array<Rational, 4> compatibility_residual(const ParamSet& p, const State& s, const Rational& x0,
                                               const CompatProbe& probe = {});

struct OrbitRow {
  int step;
  ParamSet params;
  State state;
};

struct Orbit {
  std::vector<OrbitRow> rows;
  std::optional<int> failed_step;
  std::string error;
};

/// Iterates step_forward (steps > 0) or step_backward (steps < 0).
Orbit orbit(const ParamSet& p, const State& s, int steps);
/// Tab-separated rows: step, params, f, g and, when decimals > 0, their decimal renderings.
std::string orbit_tsv(const Orbit& o, int decimals = 0);

}  // namespace qpade
