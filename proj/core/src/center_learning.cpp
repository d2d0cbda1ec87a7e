#include "fuzzcast/center_learning.hpp"

#include <cmath>
#include <string>

namespace fuzzcast {

void CenterRuleConfig::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw ValidationError("center rule: beta must be in [0, 1]");
  }
  if (!(accumulator_init > 0.0) || !std::isfinite(accumulator_init)) {
    throw ValidationError("center rule: accumulator_init must be positive and finite");
  }
}

CenterLearnerState make_center_state(const ModelConfig& config,
                                     const CenterRuleConfig& rule_config) {
  config.validate();
  rule_config.validate();
  CenterLearnerState state;
  state.win_counts.setZero(config.rule_count, config.input_dim);
  state.accumulators = Eigen::MatrixXd::Constant(config.rule_count, config.input_dim,
                                                 rule_config.accumulator_init);
  state.rule = rule_config.rule;
  state.beta = rule_config.beta;
  return state;
}

MembershipGrid init_centers(const ModelConfig& config) {
  config.validate();
  MembershipGrid grid;
  grid.sigma = config.sigma;
  grid.centers.resize(config.rule_count, config.input_dim);
  for (int rule = 0; rule < config.rule_count; ++rule) {
    const double fraction = static_cast<double>(rule) / (config.rule_count - 1);
    grid.centers.row(rule).setConstant(std::lerp(-1.0, 1.0, fraction));
  }
  return grid;
}

std::vector<Eigen::Index> find_winners(const Eigen::VectorXd& input,
                                       const MembershipGrid& grid) {
  if (input.size() != grid.input_dim()) {
    throw ValidationError("input dimension does not match the grid");
  }
  if (!input.allFinite()) {
    throw ValidationError("non-finite input component");
  }
  std::vector<Eigen::Index> winners(static_cast<std::size_t>(grid.input_dim()));
  for (Eigen::Index axis = 0; axis < grid.input_dim(); ++axis) {
    Eigen::Index best = 0;
    double best_distance = std::abs(input[axis] - grid.centers(0, axis));
    for (Eigen::Index rule = 1; rule < grid.rule_count(); ++rule) {
      const double distance = std::abs(input[axis] - grid.centers(rule, axis));
      if (distance < best_distance) {  // strict: ties keep the lowest index
        best_distance = distance;
        best = rule;
      }
    }
    winners[static_cast<std::size_t>(axis)] = best;
  }
  return winners;
}

double step_kmeans(const CenterLearnerState& state, Eigen::Index rule, Eigen::Index axis) {
  const auto wins = state.win_counts(rule, axis);
  if (wins < 1) {
    throw ValidationError("step_kmeans: center has no recorded win");
  }
  return 1.0 / static_cast<double>(wins);
}

double step_kohonen(CenterLearnerState& state, Eigen::Index rule, Eigen::Index axis,
                    double input_component, double beta) {
  double& accumulator = state.accumulators(rule, axis);
  accumulator = beta * accumulator + input_component * input_component;
  if (!(accumulator > 0.0)) {
    throw NumericalError("step_kohonen: nonpositive accumulator");
  }
  return std::min(1.0, 1.0 / accumulator);
}

void update_centers(MembershipGrid& grid, CenterLearnerState& state,
                    const Eigen::VectorXd& input) {
  if (state.win_counts.rows() != grid.rule_count() ||
      state.win_counts.cols() != grid.input_dim()) {
    throw ValidationError("center learner state does not match the grid shape");
  }
  const std::vector<Eigen::Index> winners = find_winners(input, grid);
  for (Eigen::Index axis = 0; axis < grid.input_dim(); ++axis) {
    const Eigen::Index rule = winners[static_cast<std::size_t>(axis)];
    state.win_counts(rule, axis) += 1;  // advance first: a first win steps with 1
    const double step = state.rule == CenterStepRule::KMeans
                            ? step_kmeans(state, rule, axis)
                            : step_kohonen(state, rule, axis, input[axis], state.beta);
    double& center = grid.centers(rule, axis);
    // lerp keeps the moved center inside the hull of {center, input}
    center = std::lerp(center, input[axis], step);
  }
}

}  // namespace fuzzcast
