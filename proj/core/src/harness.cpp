#include "fuzzcast/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include "json_support.hpp"

namespace fuzzcast {

void ExperimentConfig::validate() const {
  model.validate();
  learner.validate();
  center_rule.validate();
  mackey_glass.validate();
  if (!(split > 0.0 && split < 1.0)) {
    throw ValidationError("split must be in (0, 1)");
  }
  if (horizon < 1) {
    throw ValidationError("horizon must be >= 1");
  }
  if (lags.empty()) {
    throw ValidationError("at least one lag is required");
  }
  for (int lag : lags) {
    if (lag < 1) {
      throw ValidationError("lags must be positive");
    }
  }
  if (model.input_dim != static_cast<int>(lags.size())) {
    throw ValidationError("model input_dim must equal the number of lags");
  }
  if (sample_count < 2) {
    throw ValidationError("sample_count must be >= 2");
  }
}

Model make_model(const ExperimentConfig& config) {
  config.validate();
  Model model;
  model.config = config.model;
  model.learner = config.learner;
  model.center_rule = config.center_rule;
  model.freeze_centers = config.freeze_centers;
  model.grid = init_centers(config.model);
  model.centers = make_center_state(config.model, config.center_rule);
  model.weights = make_weight_state(config.model.rule_count, config.learner);
  return model;
}

double train_step(Model& model, const Eigen::VectorXd& input, double target) {
  if (!model.freeze_centers) {
    update_centers(model.grid, model.centers, input);
  }
  const Prediction prediction = forward(input, model.grid, model.weights.weights);
  learner_update(model.weights, model.learner, prediction.strengths.normalized, target);
  return prediction.value;
}

ForecastReport train_online(Model& model, const TimeSeriesFrame& frame,
                            const NormalizationMap& map) {
  if (frame.size() == 0) {
    throw DataError("train_online: empty frame");
  }
  std::vector<double> predicted;
  std::vector<double> times;
  predicted.reserve(frame.size());
  times.reserve(frame.size());
  for (std::size_t k = 0; k < frame.size(); ++k) {
    predicted.push_back(train_step(model, frame.inputs[k], frame.targets[k]));
    times.push_back(static_cast<double>(frame.target_indices[k]));
  }
  return evaluate(frame.targets, predicted, map, times);
}

std::vector<double> forecast_recursive(const Model& model,
                                       const std::vector<double>& history, int horizon,
                                       const std::vector<int>& lags) {
  if (horizon < 1) {
    throw ValidationError("forecast horizon must be >= 1");
  }
  if (lags.empty()) {
    throw ValidationError("at least one lag is required");
  }
  for (int lag : lags) {
    if (lag < 1) {
      throw ValidationError("lags must be positive");
    }
  }
  const int max_lag = *std::max_element(lags.begin(), lags.end());
  if (history.size() < static_cast<std::size_t>(max_lag)) {
    throw DataError("forecast: seed history shorter than the largest lag");
  }
  std::vector<double> rolling = history;
  rolling.reserve(history.size() + static_cast<std::size_t>(horizon));
  std::vector<double> predictions;
  predictions.reserve(static_cast<std::size_t>(horizon));
  Eigen::VectorXd input(static_cast<Eigen::Index>(lags.size()));
  for (int step = 0; step < horizon; ++step) {
    for (std::size_t j = 0; j < lags.size(); ++j) {
      input[static_cast<Eigen::Index>(j)] =
          rolling[rolling.size() - static_cast<std::size_t>(lags[j])];
    }
    const double predicted = forward(input, model.grid, model.weights.weights).value;
    predictions.push_back(predicted);
    rolling.push_back(predicted);  // the model's own output becomes history
  }
  return predictions;
}

ForecastReport evaluate(const std::vector<double>& actual,
                        const std::vector<double>& predicted, const NormalizationMap& map,
                        const std::vector<double>& times) {
  if (actual.size() != predicted.size()) {
    throw ValidationError("evaluate: actual and predicted lengths differ");
  }
  if (actual.empty()) {
    throw ValidationError("evaluate: need at least one pair");
  }
  if (!times.empty() && times.size() != actual.size()) {
    throw ValidationError("evaluate: times length does not match");
  }
  ForecastReport report;
  report.rows.reserve(actual.size());
  double squared_sum = 0.0;
  double percentage_sum = 0.0;
  bool mape_defined = true;
  double lowest = std::numeric_limits<double>::infinity();
  double highest = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const double a = map.denormalize(actual[i]);
    const double p = map.denormalize(predicted[i]);
    report.rows.push_back(
        {times.empty() ? static_cast<double>(i) : times[i], a, p});
    const double error = a - p;
    squared_sum += error * error;
    if (a == 0.0) {
      mape_defined = false;  // percentage error undefined at a zero actual
    } else {
      percentage_sum += std::abs(error) / std::abs(a);
    }
    lowest = std::min(lowest, a);
    highest = std::max(highest, a);
  }
  const double n = static_cast<double>(actual.size());
  report.rmse = std::sqrt(squared_sum / n);
  if (mape_defined) {
    report.mape = 100.0 * percentage_sum / n;
  }
  if (highest > lowest) {
    report.nrmse = report.rmse / (highest - lowest);
  }
  return report;
}

namespace {

TimeSeriesFrame slice_frame(const TimeSeriesFrame& frame, std::size_t begin,
                            std::size_t end) {
  TimeSeriesFrame out;
  out.lags = frame.lags;
  out.inputs.assign(frame.inputs.begin() + static_cast<std::ptrdiff_t>(begin),
                    frame.inputs.begin() + static_cast<std::ptrdiff_t>(end));
  out.targets.assign(frame.targets.begin() + static_cast<std::ptrdiff_t>(begin),
                     frame.targets.begin() + static_cast<std::ptrdiff_t>(end));
  out.target_indices.assign(
      frame.target_indices.begin() + static_cast<std::ptrdiff_t>(begin),
      frame.target_indices.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::vector<double>& series) {
  config.validate();
  const NormalizedSeries normalized = normalize_series(series);
  const TimeSeriesFrame frame = embed(normalized.values, config.lags);

  const std::size_t train_count =
      static_cast<std::size_t>(std::floor(config.split * static_cast<double>(frame.size())));
  if (train_count == 0) {
    throw DataError("run_experiment: split leaves no training samples");
  }
  if (train_count >= frame.size()) {
    throw DataError("run_experiment: split leaves no test samples");
  }
  const std::size_t test_count = frame.size() - train_count;
  if (static_cast<std::size_t>(config.horizon) > test_count) {
    throw DataError("run_experiment: forecast horizon exceeds the test span");
  }

  ExperimentResult result;
  result.series_count = series.size();
  result.sample_count = frame.size();
  result.train_count = train_count;
  result.test_count = test_count;
  result.model = make_model(config);

  // online pass over the chronological prefix
  result.train =
      train_online(result.model, slice_frame(frame, 0, train_count), normalized.map);

  // frozen-model one-step sweep over the test span
  {
    std::vector<double> predicted;
    std::vector<double> actual;
    std::vector<double> times;
    predicted.reserve(test_count);
    actual.reserve(test_count);
    times.reserve(test_count);
    for (std::size_t k = train_count; k < frame.size(); ++k) {
      predicted.push_back(
          forward(frame.inputs[k], result.model.grid, result.model.weights.weights).value);
      actual.push_back(frame.targets[k]);
      times.push_back(static_cast<double>(frame.target_indices[k]));
    }
    result.test_onestep = evaluate(actual, predicted, normalized.map, times);
  }

  // recursive forecast from the training boundary, fed by its own outputs
  {
    const std::size_t boundary =
        static_cast<std::size_t>(frame.target_indices[train_count]);
    const std::vector<double> seed(normalized.values.begin(),
                                   normalized.values.begin() +
                                       static_cast<std::ptrdiff_t>(boundary));
    const std::vector<double> predicted =
        forecast_recursive(result.model, seed, config.horizon, config.lags);
    std::vector<double> actual;
    std::vector<double> times;
    for (std::size_t step = 0; step < predicted.size(); ++step) {
      actual.push_back(normalized.values[boundary + step]);
      times.push_back(static_cast<double>(boundary + step));
    }
    result.forecast = evaluate(actual, predicted, normalized.map, times);
  }
  return result;
}

void write_experiment_outputs(const std::filesystem::path& out_dir,
                              const ExperimentConfig& config,
                              const ExperimentResult& result) {
  std::filesystem::create_directories(out_dir);
  write_forecast_csv(out_dir / "train.csv", result.train.rows);
  write_forecast_csv(out_dir / "test_onestep.csv", result.test_onestep.rows);
  write_forecast_csv(out_dir / "forecast.csv", result.forecast.rows);

  nlohmann::json summary;
  summary["config"] = detail::config_to_json(config);
  summary["counts"] = {{"series", result.series_count},
                       {"samples", result.sample_count},
                       {"train", result.train_count},
                       {"test", result.test_count}};
  summary["metrics"] = {{"train", detail::metrics_to_json(result.train)},
                        {"test_onestep", detail::metrics_to_json(result.test_onestep)},
                        {"forecast", detail::metrics_to_json(result.forecast)}};

  std::ofstream out(out_dir / "summary.json");
  if (!out) {
    throw DataError("cannot write " + (out_dir / "summary.json").string());
  }
  out << summary.dump(2) << '\n';
}

}  // namespace fuzzcast
