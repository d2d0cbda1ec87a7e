#include "fuzzcast/inference.hpp"

#include <cmath>
#include <string>

namespace fuzzcast {

namespace {

void check_input(const Eigen::VectorXd& input, const MembershipGrid& grid) {
  if (grid.rule_count() < 1 || grid.input_dim() < 1) {
    throw ValidationError("membership grid is empty");
  }
  if (!(grid.sigma > 0.0) || !std::isfinite(grid.sigma)) {
    throw ValidationError("membership grid sigma must be positive and finite");
  }
  if (input.size() != grid.input_dim()) {
    throw ValidationError("input has " + std::to_string(input.size()) +
                          " components, grid expects " +
                          std::to_string(grid.input_dim()));
  }
  if (!input.allFinite()) {
    throw ValidationError("non-finite input component");
  }
}

}  // namespace

void ModelConfig::validate() const {
  if (input_dim < 1) {
    throw ValidationError("input_dim must be >= 1");
  }
  if (rule_count < 2) {
    throw ValidationError("rule_count must be >= 2");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("sigma must be positive and finite");
  }
}

double default_sigma(int rule_count) {
  if (rule_count < 2) {
    throw ValidationError("rule_count must be >= 2");
  }
  return 2.0 / (rule_count - 1);
}

Eigen::MatrixXd fuzzify(const Eigen::VectorXd& input, const MembershipGrid& grid) {
  check_input(input, grid);
  const double scale = 1.0 / (2.0 * grid.sigma * grid.sigma);
  const Eigen::MatrixXd offsets = grid.centers.rowwise() - input.transpose();
  return (-offsets.array().square() * scale).exp();
}

Eigen::VectorXd aggregate(const Eigen::VectorXd& input, const MembershipGrid& grid) {
  check_input(input, grid);
  const double scale = 1.0 / (2.0 * grid.sigma * grid.sigma);
  const Eigen::MatrixXd offsets = grid.centers.rowwise() - input.transpose();
  Eigen::VectorXd exponents = offsets.rowwise().squaredNorm() * scale;
  const double shift = exponents.minCoeff();
  return (-(exponents.array() - shift)).exp();
}

FiringStrengths firing_strengths(const Eigen::VectorXd& input, const MembershipGrid& grid) {
  FiringStrengths strengths;
  strengths.aggregates = aggregate(input, grid);
  // the shifted aggregates contain an exact 1, so the sum is >= 1
  strengths.normalized = strengths.aggregates / strengths.aggregates.sum();
  return strengths;
}

Prediction forward(const Eigen::VectorXd& input, const MembershipGrid& grid,
                   const Eigen::VectorXd& weights) {
  if (weights.size() != grid.rule_count()) {
    throw ValidationError("weight vector length does not match the rule count");
  }
  if (!weights.allFinite()) {
    throw ValidationError("non-finite weight");
  }
  Prediction prediction;
  prediction.strengths = firing_strengths(input, grid);
  prediction.value = weights.dot(prediction.strengths.normalized);
  return prediction;
}

}  // namespace fuzzcast
