#pragma once

#include <span>
#include <vector>

#include "qpade/rational.hpp"

namespace qpade {

/// (a;q)_j = prod_{k<j} (1 - a q^k).
Rational qpoch(const Rational& a, const Rational& q, int j);

/// (a_1,...,a_i;q)_j, the product of single-argument symbols.
Rational qpoch(std::span<const Rational> as, const Rational& q, int j);

/// Parameters of a basic hypergeometric series k-phi-l.
struct QhgfData {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational base;
  Rational argument;
};

/// Terminating k-phi-l: sums s = 0..k_term with the balancing factor
/// [(-1)^s q^{s(s-1)/2}]^{1+l-k}, applied literally for every (k, l).
/// Requires some upper parameter equal to q^{-k_term}.
Rational qhgf_terminating(const QhgfData& h, int k_term);

/// Terminating q-Lauricella phi_D^{(l)} with alpha = q^{-k_term}; l = betas.size() = zs.size().
Rational lauricella_phiD(const Rational& alpha, std::span<const Rational> betas, const Rational& gamma,
                         std::span<const Rational> zs, const Rational& q, int k_term);

}  // namespace qpade
