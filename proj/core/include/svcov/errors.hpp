// errors.hpp - exception hierarchy shared by all svcov components.
#pragma once

#include <stdexcept>
#include <string>

namespace svcov {

/// Invalid distribution/model/field parameter. Message names the offending field.
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid run/experiment configuration (schema violations, bad flags).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// File ingestion/serialization failure. Message carries row/column location where known.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric failure: non-convergence, unsupported closed form, degenerate input.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Too few tail exceedances for an extreme-value estimator.
class insufficient_tail_error : public numeric_error {
 public:
  explicit insufficient_tail_error(const std::string& what) : numeric_error(what) {}
};

}  // namespace svcov
