// cov_spectrum.hpp - sample covariance matrices, deterministic symmetric
// eigendecomposition (cyclic Jacobi), and the spectral statistics of
// interest: spacings, trace ratios, determinant statistics, eigenvector
// localization and the sample correlation matrix.
#pragma once

#include <optional>
#include <vector>

#include "svcov/panel.hpp"
#include "svcov/volatility_field.hpp"

namespace svcov {

/// Non-normalized sample covariance S_ij = sum_t X_it X_jt, each unordered
/// pair accumulated once with compensated summation (symmetric to 0 ulp).
/// center_rows replaces X_it by X_it - mean_i first.
SymMatrix sample_cov(const Panel& panel, bool center_rows = false);

/// Per-eigenvector localization metrics.
struct Localization {
  double max_abs_component = 0.0;      // in [0,1]
  double nearest_basis_distance = 0.0; // min_i ||v -+ e_i||_2 = sqrt(2 - 2 max|v_i|)
  double participation_ratio = 0.0;    // 1/sum v_i^4, in [1,p]
  bool degenerate = false;             // eigenvalue numerically repeated
};

/// Full spectrum of a symmetric matrix. Eigenvalues descending; ties broken
/// by original index; eigenvector signs fixed so the largest-magnitude
/// component is positive.
struct EigenReport {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k]
  std::vector<double> spacings;                   // lambda_(i) - lambda_(i+1)
  std::vector<Localization> localization;
};

/// Cyclic Jacobi with fixed row-major sweep order; converges when the
/// off-diagonal Frobenius mass drops below 1e-12 * ||S||_F. Residuals
/// ||S v - lambda v|| stay below 1e-8 * ||S||_F. Throws parameter_error on
/// non-symmetric input, numeric_error if 100 sweeps do not converge.
EigenReport eigen(const SymMatrix& S);

double frobenius_norm(const SymMatrix& A);
/// max |eigenvalue|, via the Jacobi spectrum.
double spectral_norm(const SymMatrix& A);

/// a_n^-2 * ||S - S*mask||_2 where the mask keeps the diagonal.
double diag_approx_error(const SymMatrix& S, double a_n);
/// a_n^-2 * ||S - S*mask||_2 where the mask keeps pairs in Gamma_p.
double diag_approx_error(const SymMatrix& S, double a_n, const GammaSet& keep);

struct SpectralStats {
  std::vector<double> spacings;
  std::vector<double> trace_ratios;        // lambda_(i) / tr(S)
  double centered_trace = 0.0;             // a_n^-2 (tr(S) - p c_n)
  double centered_det_stat = 0.0;          // prod_i a_n^-2 (lambda_(i) - c_n)
  std::vector<double> self_normalized;     // (lambda_(i)-c_n)/(tr(S)-p c_n)
  bool undefined_ratio = false;            // tr(S) - p c_n == 0 (or tr == 0)
};

SpectralStats spectral_stats(const EigenReport& report, const SymMatrix& S,
                             double c_n, double a_n);

struct CorrelationResult {
  SymMatrix matrix;
  EigenReport report;
};

/// Sample correlation matrix of the panel (rows mean-centered and normalized
/// to unit sum of squares). Diagonal exactly 1, off-diagonal clamped to
/// [-1,1]. Throws numeric_error naming the row if a row is constant.
CorrelationResult correlation_matrix(const Panel& panel);

}  // namespace svcov
