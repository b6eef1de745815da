#include "qpade/generating.hpp"
#include "qpade/linalg.hpp"
#include "qpade/pade.hpp"
#include "support.hpp"

using namespace qpade;
using qpade::test::R;
using qpade::test::throws_kind;

namespace {

Rational naive_det(const Matrix<Rational>& m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  Rational acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<Rational> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const Rational t = m[0][j] * naive_det(minor);
    acc = j % 2 ? acc - t : acc + t;
  }
  return acc;
}

GeneratingParams d5_params(std::uint64_t seed, int m, int n) {
  return ParamSampler(seed).draw_params(Surface::D5, m, n, 16).generating();
}

}  // namespace

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  ParamSampler s(1);
  for (int n = 0; n <= 5; ++n) {
    Matrix<Rational> m(n, std::vector<Rational>(n));
    for (auto& row : m) {
      for (auto& x : row) x = s.draw() - R(1, 2);
    }
    if (n >= 2) m[0][0] = 0;  // forces a row swap
    CHECK(bareiss_determinant(m) == naive_det(m));
  }
  Matrix<Rational> singular = {{R(1), R(2)}, {R(2), R(4)}};
  CHECK(bareiss_determinant(singular) == 0);
}

TEST_CASE("fraction-free determinant over polynomials") {
  // det [[1 - x, x], [2, 3 + x]] = 3 - 4x - x^2
  Matrix<Poly> m = {{Poly({R(1), R(-1)}), Poly({R(0), R(1)})}, {Poly({R(2)}), Poly({R(3), R(1)})}};
  CHECK(bareiss_determinant(m) == Poly({R(3), R(-4), R(-1)}));
}

TEST_CASE("Schur function examples") {
  const std::vector<Rational> p = {R(1), R(2, 3), R(-5, 7), R(4, 11), R(9, 2)};
  CHECK(schur(Partition(), p) == 1);
  CHECK(schur(Partition({1}), p) == p[1]);
  CHECK(schur(Partition({2, 1}), p) == p[1] * p[2] - p[3]);
  CHECK(throws_kind([&] { (void)schur(Partition({4, 4}), p); }, ErrorKind::InsufficientCoefficients));
  CHECK(throws_kind([] { (void)Partition({1, 2}); }, ErrorKind::InvalidInput));
  CHECK(Partition::stacked(2, 3, 1).parts()[0] == 3);
  CHECK(Partition::stacked(2, 3, 1).parts()[2] == 2);
}

TEST_CASE("n = 0 and m = n = 0 constructions") {
  const auto g = d5_params(2, 3, 0);
  const auto y = generating_series(g, 3);
  const auto pq = build_PQ(g, 3, 0);
  CHECK(pq.Q == Poly::constant(1));
  CHECK(pq.P == Poly(std::vector<Rational>(y.coeffs().begin(), y.coeffs().end())));
  CHECK(build_PQ_single_det(g, 3, 0).Q == Poly::constant(1));
  const auto z = build_PQ(d5_params(3, 0, 0), 0, 0);
  CHECK(z.P == Poly::constant(1));
  CHECK(z.Q == Poly::constant(1));
}

TEST_CASE("D5 m = n = 1 agrees with the linear solve after normalizing Q(0)") {
  const auto g = d5_params(4, 1, 1);
  const auto a = build_PQ(g, 1, 1);
  const auto l = pade_linear_solve(g, 1, 1);
  const auto scaled = l.scaled(a.Q.coeff(0) / l.Q.coeff(0));
  CHECK(scaled.P == a.P);
  CHECK(scaled.Q == a.Q);
}

TEST_CASE("single determinant equals the Schur construction") {
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 3}, std::pair{3, 2}}) {
    for (Surface s : kAllSurfaces) {
      const auto g = ParamSampler(7).draw_params(s, m, n, 16).generating();
      const auto a = build_PQ(g, m, n), b = build_PQ_single_det(g, m, n);
      CHECK(a.P == b.P);
      CHECK(a.Q == b.Q);
    }
  }
}

TEST_CASE("linear solve special cases") {
  const auto z = pade_linear_solve(d5_params(5, 0, 0), 0, 0);
  CHECK(z.P.degree() == 0);
  CHECK(z.P == z.Q);
  const auto g = d5_params(6, 3, 0);
  const auto l = pade_linear_solve(g, 3, 0);
  CHECK(l.Q.degree() == 0);
  CHECK(proportionality(l, build_PQ(g, 3, 0)).has_value());
}

TEST_CASE("vanishing tau is reported") {
  // p1 = (b1 + b2 - a1 - a2)/(1 - q) = 0 makes tau_{1,1} = 0
  const auto g = ParamSet::with_degrees(Surface::D5, R(2, 5), {R(2), R(3)}, {R(1), R(4)}, 1, 1).generating();
  CHECK(throws_kind([&] { (void)build_PQ(g, 1, 1); }, ErrorKind::DegenerateParameters));
  CHECK(throws_kind([&] { (void)build_PQ_single_det(g, 1, 1); }, ErrorKind::DegenerateParameters));
  CHECK(tau(g, 1, 1) == 0);
}

TEST_CASE("verify_pade reports residual order") {
  const auto g = d5_params(8, 2, 2);
  const auto pq = build_PQ(g, 2, 2);
  const auto ok = verify_pade(pq);
  CHECK(ok.ok);
  CHECK(ok.required == 5);
  auto bad = pq;
  bad.P = bad.P + Poly::monomial(R(1), 1);
  const auto r = verify_pade(bad);
  CHECK(!r.ok);
  REQUIRE(r.first_nonzero.has_value());
  CHECK(*r.first_nonzero == 1);
  const auto t = verify_pade(build_PQ(d5_params(9, 3, 0), 3, 0));
  REQUIRE(t.first_nonzero.has_value());
  CHECK(*t.first_nonzero == 4);
}

TEST_CASE("Pade grid: three constructions agree and satisfy the condition") {
  for (Surface s : kAllSurfaces) {
    ParamSampler smp(100 + static_cast<int>(s));
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        const auto g = smp.draw_params(s, m, n, 16).generating();
        const auto a = build_PQ(g, m, n), b = build_PQ_single_det(g, m, n), l = pade_linear_solve(g, m, n);
        CHECK(verify_pade(a).ok);
        CHECK(verify_pade(l).ok);
        CHECK(a.P == b.P);
        CHECK(a.Q == b.Q);
        CHECK(proportionality(l, a).has_value());
        const auto y = generating_series(g, m + n);
        for (int k = m + 1; k <= m + n; ++k) {
          std::vector<int> seq(n, m);
          seq.push_back(k);
          CHECK(jacobi_trudi(seq, y.coeffs()) == 0);
        }
      }
    }
  }
}
