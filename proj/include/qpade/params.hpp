#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qpade/rational.hpp"

namespace qpade {

enum class Surface { E6, D5, A4, A21 };

inline constexpr Surface kAllSurfaces[] = {Surface::E6, Surface::D5, Surface::A4, Surface::A21};

/// "e6", "d5", "a4", "a21"
std::string_view surface_name(Surface s);
Surface parse_surface(std::string_view name);

/// Number of a- and b-parameters of the generating function.
struct Arity {
  int a;
  int b;
};
Arity arity(Surface s);

/// Everything the generating function Y(x) depends on. No constraint is imposed,
/// so single parameters can be shifted freely (tau-function shifts).
struct GeneratingParams {
  Surface surface;
  Rational q;
  std::vector<Rational> a;
  std::vector<Rational> b;

  GeneratingParams with_a_scaled(std::size_t i, const Rational& c) const;
  GeneratingParams with_b_scaled(std::size_t i, const Rational& c) const;
  /// Time evolution: a1 -> q a1 and, when present, b1 -> q b1.
  GeneratingParams shifted() const;
  GeneratingParams unshifted() const;

  friend bool operator==(const GeneratingParams&, const GeneratingParams&) = default;
};

/// Full parameter set of one surface. With (m, n) present, a0 = q^m and b0 = q^n;
/// without them a0, b0 are free. For E6 the constraint a0 a1 a2 a3 = b0 b1 b2 b3 always holds.
class ParamSet {
 public:
  /// Integer (m, n). For E6, `b` may hold two entries; b3 is then solved from the constraint.
  static ParamSet with_degrees(Surface s, Rational q, std::vector<Rational> a, std::vector<Rational> b, int m,
                               int n);
  /// Free a0, b0. For E6, `b` may hold two entries; b3 is then solved from the constraint.
  static ParamSet with_free_a0b0(Surface s, Rational q, Rational a0, Rational b0, std::vector<Rational> a,
                                 std::vector<Rational> b);

  Surface surface() const { return gen_.surface; }
  const Rational& q() const { return gen_.q; }
  const std::vector<Rational>& a() const { return gen_.a; }
  const std::vector<Rational>& b() const { return gen_.b; }
  const Rational& a(std::size_t i) const { return gen_.a.at(i - 1); }
  const Rational& b(std::size_t i) const { return gen_.b.at(i - 1); }
  std::optional<int> m() const { return m_; }
  std::optional<int> n() const { return n_; }
  const Rational& a0() const { return a0_; }
  const Rational& b0() const { return b0_; }
  const GeneratingParams& generating() const { return gen_; }

  /// Time evolution T; m, n, a0, b0 unchanged. Preserves the E6 constraint.
  ParamSet shifted() const;
  ParamSet unshifted() const;
  /// Same parameters with (m, n) forgotten, i.e. generic a0, b0.
  ParamSet as_free() const;

  /// Throws Error(DegenerateParameters) naming the first violated condition:
  /// q in {0, 1, -1}, a zero parameter, (q;q)_s = 0 for s <= depth, a ratio of two
  /// parameters equal to q^t with |t| <= depth, or a broken constraint.
  void validate(int depth) const;
  /// Non-throwing form of validate.
  std::optional<std::string> genericity_violation(int depth) const;

  /// key = value text, rationals as p/q. Round-trips exactly through parse().
  std::string serialize() const;
  static ParamSet parse(std::string_view text);
  /// Single-line form "surface=d5;q=2/7;a=...;b=...;a0=...;b0=..." (plus m, n when present).
  std::string inline_str() const;
  static ParamSet parse_inline(std::string_view text);

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  ParamSet() = default;
  void check_shape() const;
  GeneratingParams gen_{};
  std::optional<int> m_;
  std::optional<int> n_;
  Rational a0_;
  Rational b0_;
};

/// Default working order for generating series: m + n + 9.
inline int default_order(int m, int n) { return m + n + 9; }

/// Deterministic draws of generic parameters: rationals p/r, 2 <= p, r <= 97, gcd(p, r) = 1,
/// rejection-sampled through ParamSet::validate.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  Rational draw();
  ParamSet draw_params(Surface s, int m, int n, int depth);
  ParamSet draw_free_params(Surface s, int depth);

 private:
  std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi);
  std::mt19937_64 rng_;
};

}  // namespace qpade
