#pragma once

#include <stdexcept>

namespace fuzzcast {

/// Bad argument or configuration: wrong dimensions, non-finite input,
/// out-of-range hyperparameter.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A recursive estimator lost numerical viability: covariance no longer
/// positive definite, nonpositive accumulator, vanishing regressor.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unusable data: series too short, degenerate value range, unreadable
/// or malformed file.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fuzzcast
