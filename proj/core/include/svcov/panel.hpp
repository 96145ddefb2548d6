// panel.hpp - dense value containers shared across modules: the p x n
// observation panel (row = series, column = time) and a small symmetric
// matrix type for covariance work.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "svcov/errors.hpp"

namespace svcov {

enum class PanelRole { X, sigma, eta };

/// p x n matrix of observations, row-major. Row = series, column = time.
class Panel {
 public:
  Panel(std::size_t p, std::size_t n, PanelRole role)
      : p_(p), n_(n), role_(role), values_(p * n, 0.0) {
    if (p == 0 || n == 0) throw parameter_error("Panel: p and n must be >= 1");
  }

  std::size_t rows() const { return p_; }
  std::size_t cols() const { return n_; }
  PanelRole role() const { return role_; }

  double operator()(std::size_t i, std::size_t t) const { return values_[i * n_ + t]; }
  double& operator()(std::size_t i, std::size_t t) { return values_[i * n_ + t]; }

  const double* row(std::size_t i) const { return values_.data() + i * n_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t p_, n_;
  PanelRole role_;
  std::vector<double> values_;
};

/// Dense symmetric p x p matrix, row-major full storage.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t p) : p_(p), values_(p * p, 0.0) {
    if (p == 0) throw parameter_error("SymMatrix: dimension must be >= 1");
  }

  std::size_t dim() const { return p_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * p_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * p_ + j]; }

  /// Writes both (i,j) and (j,i); keeps the two halves equal to 0 ulp.
  void set_sym(std::size_t i, std::size_t j, double v) {
    values_[i * p_ + j] = v;
    values_[j * p_ + i] = v;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = i + 1; j < p_; ++j)
        if (values_[i * p_ + j] != values_[j * p_ + i]) return false;
    return true;
  }

 private:
  std::size_t p_;
  std::vector<double> values_;
};

/// Kahan compensated accumulator; keeps long covariance sums stable.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace svcov
