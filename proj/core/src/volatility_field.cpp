#include "svcov/volatility_field.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "svcov/errors.hpp"

namespace svcov {

CoefficientField::CoefficientField(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw parameter_error("CoefficientField: support must be non-empty");
  double max_w = 0.0;
  for (const auto& e : entries_) {
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
      throw parameter_error("CoefficientField: weights must be non-negative and finite");
    max_w = std::max(max_w, e.weight);
  }
  if (max_w <= 0.0)
    throw parameter_error("CoefficientField: at least one weight must be positive");
  if (max_w != 1.0) {
    for (auto& e : entries_) e.weight /= max_w;
    normalized_ = true;
    std::cerr << "svcov: coefficient field auto-normalized by max weight " << max_w
              << "\n";
  }
  min_k_ = max_k_ = entries_.front().k;
  min_l_ = max_l_ = entries_.front().l;
  for (const auto& e : entries_) {
    if (!lookup_.emplace(std::make_pair(e.k, e.l), e.weight).second)
      throw parameter_error("CoefficientField: duplicate support index");
    min_k_ = std::min(min_k_, e.k);
    max_k_ = std::max(max_k_, e.k);
    min_l_ = std::min(min_l_, e.l);
    max_l_ = std::max(max_l_, e.l);
  }
}

CoefficientField CoefficientField::preset(const std::string& name) {
  if (name == "single") return CoefficientField({{0, 0, 1.0}});
  if (name == "tridiag") return CoefficientField({{0, 0, 1.0}, {1, 0, 1.0}});
  if (name == "ma18") {
    std::vector<Entry> entries;
    for (int k = 1; k <= 18; ++k) entries.push_back({k, 0, 1.0});
    return CoefficientField(std::move(entries));
  }
  throw parameter_error("CoefficientField: unknown preset '" + name + "'");
}

double CoefficientField::weight(int k, int l) const {
  auto it = lookup_.find({k, l});
  return it == lookup_.end() ? 0.0 : it->second;
}

double psi_exponent(const CoefficientField& field, int offset) {
  // The max over all (k,l) is attained with (k,l) in the support: any term
  // with (k,l) off-support is at most 1 and the max-weight entry already
  // contributes at least 1.
  double best = 0.0;
  for (const auto& e : field.entries())
    best = std::max(best, e.weight + field.weight(e.k + offset, e.l));
  return best;
}

double psi_exponent_multi(const CoefficientField& field,
                          const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw parameter_error("psi_exponent_multi: empty pair list");
  double best = 0.0;
  for (const auto& [i, j] : pairs) best = std::max(best, psi_exponent(field, i - j));
  return best;
}

GammaSet gamma_p(const CoefficientField& field, std::size_t p) {
  if (p == 0) throw parameter_error("gamma_p: p must be >= 1");
  GammaSet out;
  out.p = p;
  std::vector<bool> attains_two(p, false);
  for (std::size_t d = 0; d < p; ++d)
    attains_two[d] = (psi_exponent(field, static_cast<int>(d)) == 2.0);
  for (int i = 1; i <= static_cast<int>(p); ++i)
    for (int j = 1; j <= static_cast<int>(p); ++j)
      if (attains_two[static_cast<std::size_t>(std::abs(i - j))]) out.pairs.insert({i, j});
  return out;
}

LambdaSet lambda_set(const CoefficientField& field, int i, int j, int t) {
  LambdaSet out;
  out.i = i;
  out.j = j;
  out.t = t;
  const double target = psi_exponent(field, i - j);
  const int u_lo = std::min(i, j) - field.max_k();
  const int u_hi = std::max(i, j) - field.min_k();
  const int v_lo = t - field.max_l();
  const int v_hi = t - field.min_l();
  for (int u = u_lo; u <= u_hi; ++u)
    for (int v = v_lo; v <= v_hi; ++v)
      if (field.weight(i - u, t - v) + field.weight(j - u, t - v) == target)
        out.indices.insert({u, v});
  return out;
}

Panel simulate_sigma_panel(const CoefficientField& field, const LawSpec& eta_law,
                           std::size_t p, std::size_t n, RngStream stream) {
  // eta index ranges reached by the filter over i = 1..p, t = 1..n.
  const int u0 = 1 - field.max_k();
  const int u1 = static_cast<int>(p) - field.min_k();
  const int v0 = 1 - field.max_l();
  const int v1 = static_cast<int>(n) - field.min_l();
  const std::size_t un = static_cast<std::size_t>(u1 - u0 + 1);
  const std::size_t vn = static_cast<std::size_t>(v1 - v0 + 1);

  Rng rng(stream);
  std::vector<double> eta(un * vn);
  for (auto& x : eta) x = sample_one(eta_law, rng);
  const auto eta_at = [&](int u, int v) {
    return eta[static_cast<std::size_t>(u - u0) * vn + static_cast<std::size_t>(v - v0)];
  };

  Panel sigma(p, n, PanelRole::sigma);
  for (std::size_t i = 1; i <= p; ++i) {
    for (std::size_t t = 1; t <= n; ++t) {
      double log_sigma = 0.0;
      for (const auto& e : field.entries())
        log_sigma += e.weight * eta_at(static_cast<int>(i) - e.k, static_cast<int>(t) - e.l);
      sigma(i - 1, t - 1) = std::exp(log_sigma);
    }
  }
  return sigma;
}

}  // namespace svcov
