#pragma once

#include <Eigen/Dense>

#include "fuzzcast/errors.hpp"

namespace fuzzcast {

/// Shape parameters of the fuzzy model. The rule count doubles as the
/// number of membership functions per input axis: rule l combines the
/// l-th membership function of every axis.
struct ModelConfig {
  int input_dim = 1;   ///< number of inputs, >= 1
  int rule_count = 2;  ///< membership functions per axis = rules, >= 2
  double sigma = 1.0;  ///< shared Gaussian width, normalized input units, > 0

  void validate() const;  // throws ValidationError
};

/// Width matched to the initial inter-center spacing 2/(rule_count - 1).
double default_sigma(int rule_count);

/// First-layer state: Gaussian centers plus the shared width.
/// Row l holds the center vector of rule l; column i the centers on axis i.
struct MembershipGrid {
  Eigen::MatrixXd centers;  // rule_count x input_dim
  double sigma = 1.0;

  Eigen::Index rule_count() const { return centers.rows(); }
  Eigen::Index input_dim() const { return centers.cols(); }
};

/// Rule activations for one input vector.
struct FiringStrengths {
  /// Stabilized per-rule products, each in (0, 1], largest exactly 1.
  Eigen::VectorXd aggregates;
  /// Normalized fuzzy basis values: nonnegative, sum to 1.
  Eigen::VectorXd normalized;
};

/// Per-axis membership levels exp(-(x_i - c_li)^2 / (2 sigma^2)),
/// one row per rule, one column per axis.
Eigen::MatrixXd fuzzify(const Eigen::VectorXd& input, const MembershipGrid& grid);

/// Rule activations exp(-|x - c_l|^2 / (2 sigma^2)). Squared distances are
/// summed in the exponent (never formed as a product of raw per-axis
/// exponentials) and shifted by the smallest distance before
/// exponentiation; the shift cancels in the normalization but keeps the
/// activations from underflowing to an all-zero vector.
Eigen::VectorXd aggregate(const Eigen::VectorXd& input, const MembershipGrid& grid);

FiringStrengths firing_strengths(const Eigen::VectorXd& input, const MembershipGrid& grid);

struct Prediction {
  double value = 0.0;
  FiringStrengths strengths;  ///< returned for reuse by the learners
};

/// Full forward pass: prediction = weights . normalized strengths.
/// The output is a convex combination of the weights.
Prediction forward(const Eigen::VectorXd& input, const MembershipGrid& grid,
                   const Eigen::VectorXd& weights);

}  // namespace fuzzcast
