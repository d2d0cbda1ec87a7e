#include <charconv>
#include <cstddef>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzcast/config.hpp"
#include "fuzzcast/data_pipeline.hpp"
#include "fuzzcast/harness.hpp"

namespace {

double parse_number(std::string_view text, std::string_view key) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw fuzzcast::ValidationError("--params: bad value '" + std::string(text) +
                                    "' for '" + std::string(key) + "'");
  }
  return value;
}

// "beta=0.2,gamma=0.1,n=10,tau=17,dt=0.1,x0=1.2", every key optional
fuzzcast::MackeyGlassParams parse_generator_params(const std::string& text) {
  fuzzcast::MackeyGlassParams params;
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) {
      continue;
    }
    const std::size_t equals = item.find('=');
    if (equals == std::string_view::npos) {
      throw fuzzcast::ValidationError("--params: expected key=value, got '" +
                                      std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, equals);
    const double value = parse_number(item.substr(equals + 1), key);
    if (key == "beta") {
      params.beta = value;
    } else if (key == "gamma") {
      params.gamma = value;
    } else if (key == "n") {
      params.exponent = value;
    } else if (key == "tau") {
      params.tau = value;
    } else if (key == "dt") {
      params.dt = value;
    } else if (key == "x0") {
      params.x0 = value;
    } else {
      throw fuzzcast::ValidationError("--params: unknown key '" + std::string(key) +
                                      "' (expected beta, gamma, n, tau, dt or x0)");
    }
  }
  return params;
}

nlohmann::json metrics_json(const fuzzcast::ForecastReport& report) {
  nlohmann::json out;
  out["mape"] = report.mape ? nlohmann::json(*report.mape) : nlohmann::json();
  out["rmse"] = report.rmse;
  out["nrmse"] = report.nrmse ? nlohmann::json(*report.nrmse) : nlohmann::json();
  out["steps"] = report.rows.size();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online neuro-fuzzy time-series forecaster"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand(
      "generate", "Generate a Mackey-Glass series and write it as CSV");
  std::string params_text;
  std::size_t count = 1600;
  std::string out_path;
  generate->add_option("--params", params_text,
                       "Generator overrides as key=value pairs, e.g. "
                       "beta=0.2,gamma=0.1,n=10,tau=17,dt=0.1,x0=1.2");
  generate->add_option("--count", count, "Number of samples")->capture_default_str();
  generate->add_option("--out", out_path, "Output CSV path")->required();

  auto* run =
      app.add_subcommand("run", "Run the full train/test/forecast experiment");
  std::string config_path;
  std::string data_path;
  std::string out_dir = "results";
  bool freeze_centers = false;
  run->add_option("--config", config_path, "Experiment JSON config")->required();
  run->add_option("--data", data_path,
                  "Input series CSV; a Mackey-Glass series is generated from the "
                  "config when omitted");
  run->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  run->add_flag("--freeze-centers", freeze_centers,
                "Disable center self-learning (ablation)");

  auto* eval = app.add_subcommand("eval", "Error metrics for two aligned CSV series");
  std::string actual_path;
  std::string predicted_path;
  eval->add_option("--actual", actual_path, "CSV of actual values")->required();
  eval->add_option("--predicted", predicted_path, "CSV of predicted values")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      const fuzzcast::MackeyGlassParams params = parse_generator_params(params_text);
      fuzzcast::write_series_csv(out_path,
                                 fuzzcast::generate_mackey_glass(params, count));
      std::cout << "wrote " << count << " samples to " << out_path << '\n';
    } else if (run->parsed()) {
      fuzzcast::ExperimentConfig config = fuzzcast::load_experiment_config(config_path);
      if (freeze_centers) {
        config.freeze_centers = true;
      }
      const std::vector<double> series =
          data_path.empty()
              ? fuzzcast::generate_mackey_glass(config.mackey_glass, config.sample_count)
              : fuzzcast::read_series_csv(data_path);
      const fuzzcast::ExperimentResult result = fuzzcast::run_experiment(config, series);
      fuzzcast::write_experiment_outputs(out_dir, config, result);
      nlohmann::json summary;
      summary["train"] = metrics_json(result.train);
      summary["test_onestep"] = metrics_json(result.test_onestep);
      summary["forecast"] = metrics_json(result.forecast);
      summary["out_dir"] = out_dir;
      std::cout << summary.dump(2) << '\n';
    } else if (eval->parsed()) {
      const std::vector<double> actual = fuzzcast::read_series_csv(actual_path);
      const std::vector<double> predicted = fuzzcast::read_series_csv(predicted_path);
      // the series are already in source units, so the map is the identity
      const fuzzcast::ForecastReport report =
          fuzzcast::evaluate(actual, predicted, fuzzcast::NormalizationMap{-1.0, 1.0});
      std::cout << metrics_json(report).dump(2) << '\n';
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
