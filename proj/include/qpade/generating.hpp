#pragma once

#include "qpade/params.hpp"
#include "qpade/series.hpp"

namespace qpade {

/// Which transcription of a closed form to use. `Literal` keeps the uncorrected forms that fail
/// the exact consistency checks, so each discrepancy stays reproducible.
enum class FormulaVariant { Canonical, Literal };

/// (a x;q)_inf = sum_n (-a)^n q^{n(n-1)/2} / (q;q)_n x^n, to order N.
TruncSeries qpoch_inf_series(const Rational& a, const Rational& q, int order);
/// 1/(b x;q)_inf = sum_n b^n / (q;q)_n x^n, to order N.
TruncSeries qpoch_inf_inverse_series(const Rational& b, const Rational& q, int order);

/// Y(x) as the product of the surface's infinite q-products.
TruncSeries generating_series(const GeneratingParams& g, int order);
inline TruncSeries generating_series(const ParamSet& p, int order) { return generating_series(p.generating(), order); }

/// Y(x) = exp(sum_k sum_s (b_s^k - a_s^k) / (k (1 - q^k)) x^k); E6 and D5 only.
TruncSeries tsuda_series(const GeneratingParams& g, int order);

/// Closed form of the coefficient p_k through terminating basic hypergeometric sums.
Rational pk_closed_form(const GeneratingParams& g, int k, FormulaVariant variant = FormulaVariant::Canonical);

}  // namespace qpade
