#include "qpade/pade.hpp"

#include <algorithm>
#include <sstream>

#include "qpade/error.hpp"
#include "qpade/generating.hpp"
#include "qpade/linalg.hpp"

namespace qpade {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorKind::InvalidInput, "partition parts must be weakly decreasing and non-negative");
    }
  }
}

Partition Partition::rectangle_plus_row(int m, int n, int i) {
  std::vector<int> v(n, m);
  v.push_back(i);
  return Partition(std::move(v));
}

Partition Partition::stacked(int m, int n, int i) {
  std::vector<int> v(i, m + 1);
  v.insert(v.end(), n - i, m);
  return Partition(std::move(v));
}

Rational jacobi_trudi(std::span<const int> seq, std::span<const Rational> p) {
  const int l = static_cast<int>(seq.size());
  Matrix<Rational> mat(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      const int idx = seq[i] - i + j;
      if (idx < 0) continue;
      if (idx >= static_cast<int>(p.size())) {
        throw Error(ErrorKind::InsufficientCoefficients, "Jacobi-Trudi needs p_" + std::to_string(idx));
      }
      mat[i][j] = p[idx];
    }
  }
  return bareiss_determinant(std::move(mat));
}

Rational tau(const GeneratingParams& g, int m, int n) {
  const auto y = generating_series(g, m + n);
  return schur(Partition::rectangle(m, n), y.coeffs());
}

namespace {

void require_nondegenerate(const Rational& q0, int m, int n) {
  if (q0.is_zero()) {
    throw Error(ErrorKind::DegenerateParameters,
                "s_(" + std::to_string(m) + "^" + std::to_string(n) + ") vanishes; Q(0) = 0");
  }
}

}  // namespace

PadePair build_PQ(const GeneratingParams& g, int m, int n) {
  const auto y = generating_series(g, m + n);
  const auto p = y.coeffs();
  std::vector<Rational> pc(m + 1), qc(n + 1);
  for (int i = 0; i <= m; ++i) pc[i] = schur(Partition::rectangle_plus_row(m, n, i), p);
  for (int i = 0; i <= n; ++i) {
    const Rational s = schur(Partition::stacked(m, n, i), p);
    qc[i] = i % 2 ? -s : s;
  }
  require_nondegenerate(qc[0], m, n);
  return {Poly(std::move(pc)), Poly(std::move(qc)), m, n, g};
}

PadePair build_PQ_single_det(const GeneratingParams& g, int m, int n) {
  const auto y = generating_series(g, m + n + 1);
  auto p = [&](int i) { return i < 0 ? Rational(0) : y.coeff(i); };

  // Entries are polynomials in z = 1/x.
  Matrix<Poly> pm(n + 1, std::vector<Poly>(n + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const int idx = m - i + j;
      std::vector<Rational> c;
      for (int k = 0; k <= idx; ++k) c.push_back(p(idx - k));
      pm[i][j] = Poly(std::move(c));
    }
  }
  const Poly dp = bareiss_determinant(std::move(pm));
  if (dp.degree() > m) throw Error(ErrorKind::ShapeViolation, "single-determinant P has degree > m");
  std::vector<Rational> pc(m + 1);
  for (int k = 0; k <= dp.degree(); ++k) pc[m - k] = dp.coeff(k);

  Matrix<Poly> qm(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int idx = m + 1 - i + j;
      qm[i][j] = Poly({p(idx), -p(idx - 1)});
    }
  }
  const Poly dq = bareiss_determinant(std::move(qm));
  if (dq.degree() > n) throw Error(ErrorKind::ShapeViolation, "single-determinant Q has degree > n");
  std::vector<Rational> qc(n + 1);
  for (int k = 0; k <= dq.degree(); ++k) qc[n - k] = n % 2 ? -dq.coeff(k) : dq.coeff(k);
  require_nondegenerate(qc[0], m, n);
  return {Poly(std::move(pc)), Poly(std::move(qc)), m, n, g};
}

PadePair pade_linear_solve(const GeneratingParams& g, int m, int n) {
  const auto y = generating_series(g, m + n);
  const std::size_t cols = static_cast<std::size_t>(m + n + 2);
  // unknowns: P_0..P_m, Q_0..Q_n ; condition k: sum_j p_{k-j} Q_j - P_k = 0
  Matrix<Rational> a(m + n + 1, std::vector<Rational>(cols));
  for (int k = 0; k <= m + n; ++k) {
    if (k <= m) a[k][k] = -1;
    for (int j = 0; j <= std::min(k, n); ++j) a[k][m + 1 + j] = y.coeff(k - j);
  }
  auto basis = kernel_basis(std::move(a), cols);
  if (basis.size() != 1) {
    throw Error(ErrorKind::KernelDimension, "Pade kernel has dimension " + std::to_string(basis.size()));
  }
  const auto& v = basis.front();
  std::vector<Rational> pc(v.begin(), v.begin() + m + 1);
  std::vector<Rational> qc(v.begin() + m + 1, v.end());
  return {Poly(std::move(pc)), Poly(std::move(qc)), m, n, g};
}

std::optional<Rational> proportionality(const PadePair& a, const PadePair& b) {
  std::optional<Rational> c;
  auto match = [&](const Poly& x, const Poly& y) {
    const int d = std::max(x.degree(), y.degree());
    for (int k = 0; k <= d; ++k) {
      const Rational xk = x.coeff(k), yk = y.coeff(k);
      if (yk.is_zero()) {
        if (!xk.is_zero()) return false;
        continue;
      }
      const Rational r = xk / yk;
      if (!c) c = r;
      if (*c != r) return false;
    }
    return true;
  };
  if (!match(a.P, b.P) || !match(a.Q, b.Q)) return std::nullopt;
  if (!c || c->is_zero()) return std::nullopt;
  return c;
}

std::string PadeReport::str() const {
  std::ostringstream os;
  os << (ok ? "ok" : "FAIL") << ": first nonzero coefficient of Y*Q-P at ";
  if (first_nonzero) os << "x^" << *first_nonzero;
  else os << "none through x^" << checked_order;
  os << " (required >= " << required << ")";
  return os.str();
}

PadeReport verify_pade(const PadePair& pair, int slack) {
  PadeReport r;
  r.required = pair.m + pair.n + 1;
  r.checked_order = r.required + slack;
  const auto y = generating_series(pair.params, r.checked_order);
  const auto resid = pair.Q * y - TruncSeries::from_poly(pair.P, r.checked_order);
  r.first_nonzero = resid.first_nonzero();
  r.ok = !r.first_nonzero || *r.first_nonzero >= r.required;
  return r;
}

}  // namespace qpade
