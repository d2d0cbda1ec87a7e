#include "fuzzcast/weight_learning.hpp"

#include <cmath>
#include <string>

namespace fuzzcast {

namespace {

void check_update_args(const WeightLearnerState& state, const Eigen::VectorXd& phi,
                       double target) {
  if (phi.size() != state.weights.size()) {
    throw ValidationError("strength vector length does not match the weight count");
  }
  if (!phi.allFinite() || !std::isfinite(target)) {
    throw ValidationError("non-finite learner input");
  }
}

}  // namespace

void LearnerConfig::validate() const {
  switch (algorithm) {
    case WeightAlgorithm::Rls:
      if (!(beta > 0.0 && beta <= 1.0)) {
        throw ValidationError("rls: beta must be in (0, 1]");
      }
      break;
    case WeightAlgorithm::Adaptive:
      if (!(beta >= 0.0 && beta <= 1.0)) {
        throw ValidationError("adaptive: beta must be in [0, 1]");
      }
      break;
    case WeightAlgorithm::Kaczmarz:
      break;  // beta unused
  }
  if (!(covariance_init > 0.0) || !std::isfinite(covariance_init)) {
    throw ValidationError("covariance_init must be positive and finite");
  }
  if (!(accumulator_init > 0.0) || !std::isfinite(accumulator_init)) {
    throw ValidationError("accumulator_init must be positive and finite");
  }
}

WeightLearnerState make_weight_state(int rule_count, const LearnerConfig& config) {
  config.validate();
  if (rule_count < 1) {
    throw ValidationError("rule_count must be >= 1");
  }
  WeightLearnerState state;
  state.weights = Eigen::VectorXd::Zero(rule_count);
  state.covariance =
      config.covariance_init * Eigen::MatrixXd::Identity(rule_count, rule_count);
  state.accumulator = config.accumulator_init;
  return state;
}

void rls_update(WeightLearnerState& state, const Eigen::VectorXd& phi, double target,
                double beta) {
  check_update_args(state, phi, target);
  const Eigen::VectorXd gain = state.covariance * phi;
  const double denominator = beta + phi.dot(gain);
  if (!(denominator > 0.0)) {
    throw NumericalError("rls: nonpositive gain denominator " +
                         std::to_string(denominator) +
                         "; covariance lost positive definiteness");
  }
  const double innovation = target - state.weights.dot(phi);
  state.weights += gain * (innovation / denominator);
  state.covariance =
      ((state.covariance - (gain * gain.transpose()) / denominator) / beta).eval();
  state.covariance = (0.5 * (state.covariance + state.covariance.transpose())).eval();
}

void kaczmarz_update(WeightLearnerState& state, const Eigen::VectorXd& phi, double target) {
  check_update_args(state, phi, target);
  const double norm_sq = phi.squaredNorm();
  if (norm_sq < 1e-300) {
    throw NumericalError("kaczmarz: vanishing regressor norm");
  }
  const double innovation = target - state.weights.dot(phi);
  state.weights += phi * (innovation / norm_sq);
}

void adaptive_update(WeightLearnerState& state, const Eigen::VectorXd& phi, double target,
                     double beta) {
  check_update_args(state, phi, target);
  // the accumulator advances before the weights divide by it
  state.accumulator = beta * state.accumulator + phi.squaredNorm();
  if (!(state.accumulator > 0.0)) {
    throw NumericalError("adaptive: nonpositive accumulator");
  }
  const double innovation = target - state.weights.dot(phi);
  state.weights += phi * (innovation / state.accumulator);
}

void learner_update(WeightLearnerState& state, const LearnerConfig& config,
                    const Eigen::VectorXd& phi, double target) {
  switch (config.algorithm) {
    case WeightAlgorithm::Rls:
      rls_update(state, phi, target, config.beta);
      break;
    case WeightAlgorithm::Kaczmarz:
      kaczmarz_update(state, phi, target);
      break;
    case WeightAlgorithm::Adaptive:
      adaptive_update(state, phi, target, config.beta);
      break;
  }
}

}  // namespace fuzzcast
