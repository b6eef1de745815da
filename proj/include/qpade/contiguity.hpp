#pragma once

#include <array>
#include <optional>
#include <string>

#include "qpade/generating.hpp"
#include "qpade/pade.hpp"

namespace qpade {

/// G = Y(qx)/Y(x), K = Ybar(x)/Y(x), H = lcm(G_den, K_den).
struct GKHData {
  Poly G_num, G_den, K_num, K_den, H;
};

GKHData gkh(const GeneratingParams& g);

/// Casorati determinants of y = (P_m, Y Q_n) against y(qx) and the time-shifted ybar.
struct CasoratiSet {
  PadePair base;
  PadePair shifted;
  int order = 0;
  TruncSeries Y, Ybar;
  TruncSeries y1, y2;        ///< P and Y*Q
  TruncSeries y1bar, y2bar;  ///< the same at shifted parameters
  TruncSeries D1, D2, D3;
  /// The brace polynomials: D1 = Y B1 / G_den, D2 = Y B2 / K_den, D3 = Y B3 / H.
  Poly B1, B2, B3;
  GKHData gkh;
};

inline int casorati_order(Surface s, int m, int n) { return m + n + arity(s).a + 5; }

/// Builds both Pade pairs and the determinants; throws ShapeViolation if the direct
/// determinants disagree with the brace-polynomial route.
CasoratiSet casorati(const GeneratingParams& g, int m, int n, int order);
CasoratiSet casorati_from_pairs(const PadePair& base, const PadePair& shifted, int order);

struct FactorData {
  Surface surface;
  Rational f, g, c0, c1;
  std::optional<Rational> c2;  ///< absent for E6
  Poly R1, R2, R3;             ///< the reduced determinants D_i * den_i / (x^{m+n+1} Y)
  int checked_terms = 0;       ///< coefficients of each R_i certified
};

/// Reads off (f, g, c_i) from the factored shapes. Every tracked coefficient above the
/// claimed degree must vanish exactly, otherwise ShapeViolation.
/// The Literal variant uses the degree-0 D3 shape for A4.
FactorData extract_factors(const CasoratiSet& cs, FormulaVariant variant = FormulaVariant::Canonical);

/// (f, g) from the tau-function formulas; tau-bar is rebuilt at T-shifted parameters.
/// The Literal variant uses the uncorrected g prefactors (no sign, no A4 (1-b1/a1) factor).
struct SpecialFG {
  Rational f, g;
};
SpecialFG special_fg(const GeneratingParams& g, int m, int n, FormulaVariant variant = FormulaVariant::Canonical);

/// y(q^shift x) or ybar(q^shift x)
struct Slot {
  bool bar = false;
  int shift = 0;
};

struct ContiguityOperator {
  std::array<Poly, 3> coeff;
  std::array<Slot, 3> slot;
  /// sum_i coeff_i * (y or ybar)(q^{shift_i} x)
  TruncSeries apply(const TruncSeries& y, const TruncSeries& ybar, const Rational& q) const;
};

/// Extraction at the base and at the T-shifted parameters, with optional rescaling of the
/// three Pade pairs involved (at params, T params, T^2 params).
struct ContiguityData {
  CasoratiSet cs, csT;
  FactorData fd, fdT;
  Rational C0, C1;
  Rational c0c1() const { return C0 * C1; }
};

ContiguityData contiguity_data(const GeneratingParams& g, int m, int n,
                               const std::array<Rational, 3>& pair_scales = {Rational(1), Rational(1), Rational(1)},
                               FormulaVariant variant = FormulaVariant::Canonical);

/// The two contiguity relations with the Casorati normalization:
/// L2 acts on (ybar, y(qx), y), L3 on (y, ybar, ybar(x/q)).
struct L2L3 {
  ContiguityOperator L2, L3;
};
L2L3 assemble_L2_L3(const ContiguityData& cd);

}  // namespace qpade
