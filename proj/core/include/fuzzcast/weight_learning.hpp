#pragma once

#include <Eigen/Dense>

#include "fuzzcast/errors.hpp"

namespace fuzzcast {

enum class WeightAlgorithm { Rls, Kaczmarz, Adaptive };

/// Output-layer learner selection and hyperparameters.
struct LearnerConfig {
  WeightAlgorithm algorithm = WeightAlgorithm::Kaczmarz;
  /// Forgetting factor. RLS requires (0, 1], the adaptive learner [0, 1],
  /// Kaczmarz ignores it.
  double beta = 1.0;
  /// RLS initial covariance scale: P(0) = covariance_init * I. Large values
  /// encode a weak prior on the zero-initialized weights.
  double covariance_init = 1e4;
  /// Initial scalar accumulator of the adaptive learner.
  double accumulator_init = 1.0;

  void validate() const;
};

/// Mutable learner state. The covariance matrix is only consumed by the
/// RLS update, the scalar accumulator only by the adaptive update; both
/// live here so a model can carry any of the three learners.
struct WeightLearnerState {
  Eigen::VectorXd weights;
  Eigen::MatrixXd covariance;  // symmetric positive definite
  double accumulator = 1.0;    // > 0
};

/// Zero weights, covariance_init * I covariance, accumulator_init scalar.
WeightLearnerState make_weight_state(int rule_count, const LearnerConfig& config);

/// Exponentially weighted recursive least squares. Advances the weights with
/// the prior covariance, then the covariance itself, and re-symmetrizes the
/// result as (P + P^T) / 2. Throws NumericalError when the gain denominator
/// beta + phi^T P phi is nonpositive (covariance lost positive definiteness).
void rls_update(WeightLearnerState& state, const Eigen::VectorXd& phi, double target,
                double beta);

/// One-step projection onto the current sample's solution hyperplane: the
/// posterior residual weights . phi - target is exactly zero.
void kaczmarz_update(WeightLearnerState& state, const Eigen::VectorXd& phi, double target);

/// Tracking/smoothing learner: the accumulator advances first,
/// p <- beta p + |phi|^2, and the weight step divides by the advanced value.
/// With beta = 0 this reproduces the Kaczmarz step exactly. The scalar p
/// plays the role of the RLS covariance collapsed to one gain (loosely its
/// trace); the two recursions do not maintain that association exactly for
/// general beta, so nothing enforces it.
void adaptive_update(WeightLearnerState& state, const Eigen::VectorXd& phi, double target,
                     double beta);

/// Dispatches on config.algorithm.
void learner_update(WeightLearnerState& state, const LearnerConfig& config,
                    const Eigen::VectorXd& phi, double target);

}  // namespace fuzzcast
