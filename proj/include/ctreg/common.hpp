#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace ctreg {

/// A state-space point. Stored dense; dimension is data-dependent.
using Point = Eigen::VectorXd;

/// A linear solve, factorization, or integration failed numerically.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or inconsistent configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require_finite(const Point& p, const char* what) {
  if (!p.allFinite())
    throw std::invalid_argument(std::string(what) + ": non-finite coordinates");
}

} // namespace ctreg
