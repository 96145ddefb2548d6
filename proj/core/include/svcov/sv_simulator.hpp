// sv_simulator.hpp - full stochastic volatility model panels X_it =
// sigma_it * Z_it for both tail regimes, the three simulation-study presets,
// and the normalization sequences a_n, b_n, c_n.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "svcov/distributions.hpp"
#include "svcov/panel.hpp"
#include "svcov/volatility_field.hpp"

namespace svcov {

/// Which factor carries the heavy tail.
enum class Regime { case1_heavy_z, case2_heavy_sigma };

/// Complete description of one simulated model.
struct ModelSpec {
  Regime regime;
  LawSpec z_law;
  LawSpec eta_law;
  CoefficientField field;
  std::size_t p = 1;
  std::size_t n = 1;
  std::uint64_t master_seed = 0;
};

/// Throws parameter_error naming the violated regime constraint.
/// case1 needs a regularly varying Z and light-tailed log-volatility noise;
/// case2 needs light-tailed Z and regularly varying exp(eta).
void validate(const ModelSpec& spec);

/// Regular-variation index of the marginal |X| tail: the Z index in case1,
/// the exp(eta) index in case2 (Breiman inheritance).
double model_tail_index(const ModelSpec& spec);

/// Simulates the X panel. The sigma field and the Z field are generated on
/// disjoint streams (kEtaStreamId / kZStreamId) of spec.master_seed, so
/// regenerating with the same seed reproduces bit-identical panels and the
/// sigma field does not depend on the Z stream.
Panel simulate_panel(const ModelSpec& spec);

/// Volatility panel only (same eta stream as simulate_panel).
Panel simulate_sigma(const ModelSpec& spec);

/// The three simulation-study presets, all on the MA(18) log-volatility
/// filter with defaults p=18, n=1567:
///   case1           Gaussian(0,1) eta, Student-t(3) Z
///   case2_exp       Exponential(3) eta, Gaussian(0,1) Z
///   case2_convequiv conv_equiv_eta eta, Gaussian(0,1) Z
ModelSpec preset(const std::string& name, std::size_t p = 18, std::size_t n = 1567,
                 std::uint64_t seed = 0);

/// Normalization sequences. a_n solves n P(|X| > a_n) ~ 1; c_n = n E[X^2]
/// when the marginal tail index is in (2,4) and 0 otherwise; b_n (when
/// requested for a pair) solves n P(|X_i0 X_j0| > b_n) ~ 1.
struct NormSeq {
  double a_n = 0.0;
  double c_n = 0.0;
  std::optional<double> b_n;
};

/// Pooled Monte Carlo estimator of the normalization sequences: one marginal
/// |X| sample of size mc_budget is drawn (analytic quantiles are used instead
/// when the volatility is degenerate), and a_n/c_n for any n <= mc_budget are
/// read from that single pool, which makes a_n monotone in n.
class NormCalculator {
 public:
  NormCalculator(const ModelSpec& spec, std::size_t mc_budget);

  double a_n(std::size_t n) const;
  double c_n(std::size_t n) const;
  /// b_n for the pair (i,j), 1-based rows; drawn on its own stream.
  double b_n(std::size_t n, int i, int j) const;

 private:
  ModelSpec spec_;
  std::size_t budget_;
  bool analytic_ = false;
  double sigma_const_ = 1.0;
  std::vector<double> sorted_abs_x_;  // empty in the analytic case
  double mean_sq_ = 0.0;
  double tail_index_ = 0.0;
};

/// One-shot convenience wrapper around NormCalculator.
NormSeq norm_sequences(const ModelSpec& spec, std::size_t n, std::size_t mc_budget);

/// As above but also fills b_n for the pair (i,j).
NormSeq norm_sequences_pair(const ModelSpec& spec, std::size_t n,
                            std::size_t mc_budget, int i, int j);

/// Empirical quantile convention used throughout: for the ascending sorted
/// sample x_(1) <= ... <= x_(m), quantile(q) = x_(ceil(q m)).
double empirical_quantile(const std::vector<double>& sorted_ascending, double q);

}  // namespace svcov
