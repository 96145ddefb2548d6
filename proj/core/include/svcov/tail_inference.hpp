// tail_inference.hpp - empirical tail machinery: Hill estimation, the
// cross-product Hill matrix, tail-balance factors, extremogram and angular
// (spectral-measure) concentration estimates, and importance-weighted
// evaluation of the tail-process mixture law of the convolution-equivalent
// regime.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "svcov/distributions.hpp"
#include "svcov/panel.hpp"
#include "svcov/volatility_field.hpp"

namespace svcov {

struct TailReport {
  double hill_index = 0.0;
  double threshold = 0.0;           // the (k+1)-th largest order statistic
  std::size_t k_exceedances = 0;
  std::optional<std::pair<double, double>> balance;  // (p_plus, p_minus)
  std::optional<std::vector<double>> extremogram;    // per requested lag
};

/// Number of exceedances used at quantile q for a sample of size n:
/// k = ceil((1-q) n). Rank-based, so Hill estimates are scale invariant.
std::size_t exceedance_count(std::size_t n, double threshold_quantile);

/// Hill estimator over the k largest order statistics:
/// k / sum_{i=1..k} log(X_(i) / X_(k+1)). Requires k >= 3 and positive data
/// in the tail; throws insufficient_tail_error otherwise.
TailReport hill(const std::vector<double>& data, double threshold_quantile);

/// p x p matrix of Hill indices of the product series |X_it X_jt|.
/// Symmetric by construction; entries whose tail is too thin are missing.
struct HillMatrix {
  std::size_t p = 0;
  std::vector<std::optional<double>> entries;  // row-major p x p

  std::optional<double> at(std::size_t i, std::size_t j) const {
    return entries[i * p + j];
  }
};

HillMatrix hill_matrix(const Panel& panel, double threshold_quantile);

/// Empirical tail-balance factors (p_plus, p_minus) above the |data|
/// quantile; the two components sum to one exactly.
std::pair<double, double> tail_balance(const std::vector<double>& data,
                                       double threshold_quantile);

struct ExtremogramPoint {
  int lag = 0;
  std::optional<double> estimate;  // missing when joint observations < 20
  double se = 0.0;                 // binomial standard error
  std::size_t joint_count = 0;
};

/// Estimates P(|X_{t+h}| > u | |X_t| > u) per lag, u the empirical
/// threshold_quantile of |series| (plug-in: same series for threshold and
/// conditioning).
std::vector<ExtremogramPoint> extremogram(const std::vector<double>& series,
                                          const std::vector<int>& lags,
                                          double threshold_quantile);

struct AngularConcentration {
  double estimate = 0.0;  // mass within axis_epsilon of signed basis vectors
  double se = 0.0;
  std::size_t exceedances = 0;
};

/// Conditional on ||X_t||_inf above its threshold_quantile: the fraction of
/// sup-norm-normalized observations within l2-distance axis_epsilon of a
/// signed canonical basis vector. Requires >= 20 exceedances.
AngularConcentration angular_concentration(const Panel& panel,
                                           double threshold_quantile,
                                           double axis_epsilon);

/// Per-lag interval constraints on |Theta_t|, t = 0..L. nullopt leaves the
/// lag unconstrained.
struct MixtureBox {
  std::vector<std::optional<std::pair<double, double>>> abs_intervals;
};

struct BandEstimate {
  double value = 0.0;  // median of block means
  double lo = 0.0;     // interquartile band of the block estimates
  double hi = 0.0;
};

struct MixtureEstimate {
  BandEstimate formula;
  double empirical = 0.0;
  double empirical_se = 0.0;
  std::size_t conditioning_count = 0;
  double psi = 0.0;
  double alpha = 0.0;
  std::size_t lambda0_size = 0;
};

struct MixtureOptions {
  std::uint64_t seed = 0;
  std::size_t path_length = 200000;      // for the empirical counterpart
  double conditioning_quantile = 0.999;  // threshold on |X_i0 X_j0|
  std::size_t blocks = 32;               // median-of-means blocks
};

/// Evaluates the probability of the box under the spectral tail process of
/// the product series (X_it X_jt): by the importance-weighted mixture formula
/// in the convolution-equivalent regime (weights |X_i0 X_j0|^{alpha/psi^{ij}}
/// have tail index 1, hence the median-of-means band), or by the exact
/// degenerate law (|Theta_0| = 1, Theta_t = 0 for t >= 1) when
/// E[exp(alpha eta)] is infinite. Also returns the empirical conditional
/// estimate from a long simulated path for cross-validation.
MixtureEstimate tail_process_mixture(const CoefficientField& field, int i, int j,
                                     const LawSpec& eta_law, const LawSpec& z_law,
                                     const MixtureBox& box, std::size_t mc_budget,
                                     const MixtureOptions& opts = {});

}  // namespace svcov
