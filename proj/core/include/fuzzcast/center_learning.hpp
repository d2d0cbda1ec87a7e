#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fuzzcast/inference.hpp"

namespace fuzzcast {

enum class CenterStepRule {
  KMeans,   ///< step 1/k for a center winning its k-th sample (online k-means)
  Kohonen,  ///< step 1/p with p <- beta p + x^2 (self-organizing map estimate)
};

struct CenterRuleConfig {
  CenterStepRule rule = CenterStepRule::KMeans;
  double beta = 1.0;             ///< Kohonen forgetting factor, in [0, 1]
  double accumulator_init = 1.0; ///< Kohonen initial accumulator, > 0

  void validate() const;
};

/// Winner bookkeeping, one entry per center coordinate.
struct CenterLearnerState {
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> win_counts;
  Eigen::MatrixXd accumulators;  // Kohonen rule only, all > 0
  CenterStepRule rule = CenterStepRule::KMeans;
  double beta = 1.0;
};

CenterLearnerState make_center_state(const ModelConfig& config,
                                     const CenterRuleConfig& rule_config);

/// Centers evenly spaced over [-1, 1] on every axis: rule l sits at
/// -1 + l * 2/(rule_count - 1) on each coordinate. Requires rule_count >= 2
/// (the spacing is undefined otherwise).
MembershipGrid init_centers(const ModelConfig& config);

/// Index of the nearest center on each axis, independently per axis.
/// Ties go to the lowest rule index.
std::vector<Eigen::Index> find_winners(const Eigen::VectorXd& input,
                                       const MembershipGrid& grid);

/// One winner-take-all pass: on every axis exactly one center moves toward
/// the input component by the configured step rule; all other centers are
/// untouched. Win counters advance before the step is computed, so the
/// first win always moves a center exactly onto the input.
void update_centers(MembershipGrid& grid, CenterLearnerState& state,
                    const Eigen::VectorXd& input);

/// Step 1/k for the center (rule, axis) whose counter was just advanced to k.
double step_kmeans(const CenterLearnerState& state, Eigen::Index rule, Eigen::Index axis);

/// Advances the accumulator p <- beta p + x^2 and returns 1/p clamped to
/// (0, 1]. Throws NumericalError when the advanced accumulator is
/// nonpositive (possible only with x = 0 and beta = 0).
double step_kohonen(CenterLearnerState& state, Eigen::Index rule, Eigen::Index axis,
                    double input_component, double beta);

}  // namespace fuzzcast
