#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "fuzzcast/center_learning.hpp"
#include "fuzzcast/data_pipeline.hpp"
#include "fuzzcast/inference.hpp"
#include "fuzzcast/weight_learning.hpp"

namespace fuzzcast {

/// Everything a single experiment run needs. The model's input dimension
/// always equals the number of lags.
struct ExperimentConfig {
  ModelConfig model{3, 5, 0.5};
  LearnerConfig learner;
  CenterRuleConfig center_rule;
  bool freeze_centers = false;    ///< disable center self-learning (ablation)
  double split = 0.4;             ///< training fraction, chronological prefix
  int horizon = 14;               ///< recursive forecast steps
  std::vector<int> lags = {1, 2, 3};
  std::uint64_t seed = 0;         ///< echoed into outputs; the loop itself is deterministic
  MackeyGlassParams mackey_glass; ///< used when no data file is supplied
  std::size_t sample_count = 1600;

  void validate() const;
};

/// A complete online model: first-layer grid plus both learners' states.
struct Model {
  ModelConfig config;
  LearnerConfig learner;
  CenterRuleConfig center_rule;
  bool freeze_centers = false;
  MembershipGrid grid;
  CenterLearnerState centers;
  WeightLearnerState weights;
};

Model make_model(const ExperimentConfig& config);

/// One online step: adapt centers first, evaluate the prediction with the
/// pre-update weights on the refreshed grid, then feed the supervised
/// learner. Returns the pre-update prediction (the honest online residual
/// is target minus this value).
double train_step(Model& model, const Eigen::VectorXd& input, double target);

/// Per-step records in source units plus summary metrics. The mean absolute
/// percentage error is absent when any actual value is zero, the normalized
/// RMSE when the actual values have zero range.
struct ForecastReport {
  std::vector<ForecastRow> rows;
  std::optional<double> mape;  ///< percent
  double rmse = 0.0;           ///< source units
  std::optional<double> nrmse; ///< rmse / range of actuals
};

/// Single pass over the frame in order, no epochs. The report holds the
/// pre-update predictions.
ForecastReport train_online(Model& model, const TimeSeriesFrame& frame,
                            const NormalizationMap& map);

/// Recursive multi-step forecast: each step assembles its lagged input from
/// the rolling history, predicts, and appends the prediction to the history.
/// No model state is touched. History and returned predictions are in
/// normalized units, most recent value last.
std::vector<double> forecast_recursive(const Model& model,
                                       const std::vector<double>& history, int horizon,
                                       const std::vector<int>& lags);

/// Metrics over aligned actual/predicted pairs given in normalized units;
/// rows and metrics are reported in source units through the map. Optional
/// times label the rows (defaults to 0, 1, 2, ...).
ForecastReport evaluate(const std::vector<double>& actual,
                        const std::vector<double>& predicted, const NormalizationMap& map,
                        const std::vector<double>& times = {});

struct ExperimentResult {
  ForecastReport train;         ///< online pre-update predictions
  ForecastReport test_onestep;  ///< frozen-model one-step sweep over the test span
  ForecastReport forecast;      ///< recursive forecast from the training boundary
  std::size_t series_count = 0;
  std::size_t sample_count = 0; ///< after embedding
  std::size_t train_count = 0;
  std::size_t test_count = 0;
  Model model;                  ///< state after training
};

/// Full protocol: normalize, embed, split chronologically, train online over
/// the prefix, then sweep one-step predictions over the test span and run a
/// recursive forecast from the training boundary. No learning happens after
/// the training pass.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::vector<double>& series);

/// Writes train.csv, test_onestep.csv, forecast.csv and summary.json
/// (metrics, config echo, sample counts) under out_dir.
void write_experiment_outputs(const std::filesystem::path& out_dir,
                              const ExperimentConfig& config,
                              const ExperimentResult& result);

}  // namespace fuzzcast
