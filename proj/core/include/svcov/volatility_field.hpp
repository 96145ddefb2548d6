// volatility_field.hpp - finite-support filter coefficient fields for the
// log-volatility process, their tail-exponent combinatorics (psi^{ij},
// Lambda index sets, Gamma_p), and volatility panel generation by 2-D linear
// filtering of iid noise.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "svcov/distributions.hpp"
#include "svcov/panel.hpp"
#include "svcov/rng.hpp"

namespace svcov {

/// Finite-support field of non-negative filter weights psi_{kl}. The maximum
/// weight is normalized to exactly 1 on construction (weights are divided by
/// their maximum when needed; normalized_on_construction() reports whether
/// that rescaling happened so callers can warn).
class CoefficientField {
 public:
  struct Entry {
    int k;
    int l;
    double weight;
  };

  explicit CoefficientField(std::vector<Entry> entries);

  /// Named presets: "single" (psi_00 = 1), "tridiag" (psi_00 = psi_10 = 1),
  /// "ma18" (psi_{k,0} = 1 for k = 1..18, the moving-average log-volatility
  /// filter of the simulation study).
  static CoefficientField preset(const std::string& name);

  const std::vector<Entry>& entries() const { return entries_; }
  bool normalized_on_construction() const { return normalized_; }

  /// Weight at (k,l); zero off the support.
  double weight(int k, int l) const;

  int min_k() const { return min_k_; }
  int max_k() const { return max_k_; }
  int min_l() const { return min_l_; }
  int max_l() const { return max_l_; }

 private:
  std::vector<Entry> entries_;
  std::map<std::pair<int, int>, double> lookup_;
  int min_k_, max_k_, min_l_, max_l_;
  bool normalized_ = false;
};

/// max_{k,l} (psi_{kl} + psi_{k+d,l}) for the row offset d = i - j.
/// Lies in [1,2]; equals 2 exactly when d = 0.
double psi_exponent(const CoefficientField& field, int offset);

/// Exponent of a multi-pair: max over the component pairs of psi^{i_l j_l}.
double psi_exponent_multi(const CoefficientField& field,
                          const std::vector<std::pair<int, int>>& pairs);

/// Index pairs (i,j), 1 <= i,j <= p, whose product series has the heaviest
/// (index alpha/2) tails: psi^{ij} = 2.
struct GammaSet {
  std::size_t p = 0;
  std::set<std::pair<int, int>> pairs;

  bool contains(int i, int j) const { return pairs.count({i, j}) > 0; }
};

GammaSet gamma_p(const CoefficientField& field, std::size_t p);

/// The argmax index set Lambda_{i,j}^{(t)} = {(u,v) :
/// psi_{i-u,t-v} + psi_{j-u,t-v} = psi^{ij}}. Shift identity:
/// Lambda^{(t)} = Lambda^{(0)} + (0,t).
struct LambdaSet {
  int i = 0;
  int j = 0;
  int t = 0;
  std::set<std::pair<int, int>> indices;
};

LambdaSet lambda_set(const CoefficientField& field, int i, int j, int t);

/// Generates the volatility panel sigma_{it} = exp(sum_{(k,l)} psi_{kl}
/// eta_{i-k,t-l}) for i = 1..p, t = 1..n. The underlying eta field covers the
/// full index range the finite support reaches, so there is no boundary
/// truncation. Bit-reproducible for identical inputs.
Panel simulate_sigma_panel(const CoefficientField& field, const LawSpec& eta_law,
                           std::size_t p, std::size_t n, RngStream stream);

}  // namespace svcov
