#include "svcov/cov_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "svcov/errors.hpp"

namespace svcov {

SymMatrix sample_cov(const Panel& panel, bool center_rows) {
  if (panel.role() != PanelRole::X)
    throw parameter_error("sample_cov: panel role must be X");
  const std::size_t p = panel.rows(), n = panel.cols();
  std::vector<double> means(p, 0.0);
  if (center_rows) {
    for (std::size_t i = 0; i < p; ++i) {
      KahanSum s;
      for (std::size_t t = 0; t < n; ++t) s.add(panel(i, t));
      means[i] = s.value() / static_cast<double>(n);
    }
  }
  SymMatrix out(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      KahanSum s;
      for (std::size_t t = 0; t < n; ++t)
        s.add((panel(i, t) - means[i]) * (panel(j, t) - means[j]));
      out.set_sym(i, j, s.value());
    }
  }
  return out;
}

double frobenius_norm(const SymMatrix& A) {
  KahanSum s;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) s.add(A(i, j) * A(i, j));
  return std::sqrt(s.value());
}

namespace {

double off_diagonal_frobenius(const SymMatrix& A) {
  KahanSum s;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (i != j) s.add(A(i, j) * A(i, j));
  return std::sqrt(s.value());
}

}  // namespace

EigenReport eigen(const SymMatrix& S) {
  if (!S.is_symmetric())
    throw parameter_error("eigen: matrix is not symmetric (contract violation)");
  const std::size_t p = S.dim();
  const double scale = frobenius_norm(S);

  SymMatrix a = S;
  std::vector<std::vector<double>> v(p, std::vector<double>(p, 0.0));
  for (std::size_t i = 0; i < p; ++i) v[i][i] = 1.0;  // v[i] = i-th column of V

  if (scale > 0.0) {
    const double tol = 1e-12 * scale;
    bool converged = off_diagonal_frobenius(a) < tol;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
      for (std::size_t i = 0; i + 1 < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
          const double apq = a(i, j);
          if (apq == 0.0) continue;
          const double theta = (a(j, j) - a(i, i)) / (2.0 * apq);
          double t;
          if (std::fabs(theta) > 1e150) {
            t = 1.0 / (2.0 * theta);
          } else {
            t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;
          const double tau = s / (1.0 + c);

          const double aii = a(i, i), ajj = a(j, j);
          a(i, i) = aii - t * apq;
          a(j, j) = ajj + t * apq;
          a(i, j) = 0.0;
          a(j, i) = 0.0;
          for (std::size_t k = 0; k < p; ++k) {
            if (k == i || k == j) continue;
            const double aki = a(k, i), akj = a(k, j);
            const double new_ki = aki - s * (akj + tau * aki);
            const double new_kj = akj + s * (aki - tau * akj);
            a.set_sym(k, i, new_ki);
            a.set_sym(k, j, new_kj);
          }
          for (std::size_t k = 0; k < p; ++k) {
            const double vki = v[i][k], vkj = v[j][k];
            v[i][k] = vki - s * (vkj + tau * vki);
            v[j][k] = vkj + s * (vki - tau * vkj);
          }
        }
      }
      converged = off_diagonal_frobenius(a) < tol;
    }
    if (!converged)
      throw numeric_error("eigen: Jacobi sweeps failed to converge in 100 sweeps");
  }

  // Descending order, ties broken by original index.
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  EigenReport report;
  report.eigenvalues.resize(p);
  report.eigenvectors.resize(p);
  for (std::size_t r = 0; r < p; ++r) {
    const std::size_t src = order[r];
    report.eigenvalues[r] = a(src, src);
    std::vector<double> vec = v[src];
    // Sign convention: largest-magnitude component positive.
    std::size_t arg = 0;
    for (std::size_t k = 1; k < p; ++k)
      if (std::fabs(vec[k]) > std::fabs(vec[arg])) arg = k;
    if (vec[arg] < 0.0)
      for (auto& x : vec) x = -x;
    report.eigenvectors[r] = std::move(vec);
  }

  report.spacings.resize(p > 0 ? p - 1 : 0);
  for (std::size_t r = 0; r + 1 < p; ++r)
    report.spacings[r] = report.eigenvalues[r] - report.eigenvalues[r + 1];

  const double gap_tol = 1e-9 * std::max(scale, 1e-300);
  report.localization.resize(p);
  for (std::size_t r = 0; r < p; ++r) {
    const auto& vec = report.eigenvectors[r];
    double max_abs = 0.0;
    double sum4 = 0.0;
    for (double x : vec) {
      max_abs = std::max(max_abs, std::fabs(x));
      sum4 += x * x * x * x;
    }
    Localization loc;
    loc.max_abs_component = std::min(max_abs, 1.0);
    loc.nearest_basis_distance = std::sqrt(std::max(0.0, 2.0 - 2.0 * max_abs));
    loc.participation_ratio = sum4 > 0.0 ? 1.0 / sum4 : static_cast<double>(p);
    loc.degenerate = (r > 0 && report.spacings[r - 1] <= gap_tol) ||
                     (r + 1 < p && report.spacings[r] <= gap_tol);
    report.localization[r] = loc;
  }
  return report;
}

double spectral_norm(const SymMatrix& A) {
  const EigenReport report = eigen(A);
  double best = 0.0;
  for (double lam : report.eigenvalues) best = std::max(best, std::fabs(lam));
  return best;
}

namespace {

double masked_error(const SymMatrix& S, double a_n,
                    const std::function<bool(std::size_t, std::size_t)>& keep) {
  if (!(a_n > 0.0)) throw parameter_error("diag_approx_error: a_n must be > 0");
  SymMatrix rest(S.dim());
  for (std::size_t i = 0; i < S.dim(); ++i)
    for (std::size_t j = 0; j < S.dim(); ++j) rest(i, j) = keep(i, j) ? 0.0 : S(i, j);
  return spectral_norm(rest) / (a_n * a_n);
}

}  // namespace

double diag_approx_error(const SymMatrix& S, double a_n) {
  return masked_error(S, a_n, [](std::size_t i, std::size_t j) { return i == j; });
}

double diag_approx_error(const SymMatrix& S, double a_n, const GammaSet& keep) {
  return masked_error(S, a_n, [&](std::size_t i, std::size_t j) {
    return keep.contains(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  });
}

SpectralStats spectral_stats(const EigenReport& report, const SymMatrix& S,
                             double c_n, double a_n) {
  if (report.eigenvalues.size() != S.dim())
    throw parameter_error("spectral_stats: report does not match matrix dimension");
  if (!(a_n > 0.0)) throw parameter_error("spectral_stats: a_n must be > 0");
  const std::size_t p = S.dim();
  KahanSum tr;
  for (std::size_t i = 0; i < p; ++i) tr.add(S(i, i));
  const double trace = tr.value();
  const double centered = trace - static_cast<double>(p) * c_n;

  SpectralStats stats;
  stats.spacings = report.spacings;
  stats.centered_trace = centered / (a_n * a_n);
  stats.undefined_ratio = (trace == 0.0) || (centered == 0.0);
  stats.trace_ratios.resize(p, 0.0);
  stats.self_normalized.resize(p, 0.0);
  double det = 1.0;
  for (std::size_t i = 0; i < p; ++i) {
    const double lam = report.eigenvalues[i];
    if (trace != 0.0) stats.trace_ratios[i] = lam / trace;
    if (centered != 0.0) stats.self_normalized[i] = (lam - c_n) / centered;
    det *= (lam - c_n) / (a_n * a_n);
  }
  stats.centered_det_stat = det;
  return stats;
}

CorrelationResult correlation_matrix(const Panel& panel) {
  const std::size_t p = panel.rows(), n = panel.cols();
  Panel tilde(p, n, PanelRole::X);
  for (std::size_t i = 0; i < p; ++i) {
    KahanSum mean_sum;
    for (std::size_t t = 0; t < n; ++t) mean_sum.add(panel(i, t));
    const double mean = mean_sum.value() / static_cast<double>(n);
    KahanSum sq;
    for (std::size_t t = 0; t < n; ++t) {
      const double c = panel(i, t) - mean;
      sq.add(c * c);
    }
    const double norm = std::sqrt(sq.value());
    if (!(norm > 0.0))
      throw numeric_error("correlation_matrix: row " + std::to_string(i + 1) +
                          " is constant (zero centered sum of squares)");
    for (std::size_t t = 0; t < n; ++t) tilde(i, t) = (panel(i, t) - mean) / norm;
  }
  SymMatrix r(p);
  for (std::size_t i = 0; i < p; ++i) {
    r(i, i) = 1.0;
    for (std::size_t j = i + 1; j < p; ++j) {
      KahanSum s;
      for (std::size_t t = 0; t < n; ++t) s.add(tilde(i, t) * tilde(j, t));
      r.set_sym(i, j, std::clamp(s.value(), -1.0, 1.0));
    }
  }
  EigenReport report = eigen(r);
  return CorrelationResult{std::move(r), std::move(report)};
}

}  // namespace svcov
