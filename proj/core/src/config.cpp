#include "fuzzcast/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json_support.hpp"

namespace fuzzcast {

namespace detail {

namespace {

WeightAlgorithm algorithm_from_name(const std::string& name) {
  if (name == "rls") return WeightAlgorithm::Rls;
  if (name == "kaczmarz") return WeightAlgorithm::Kaczmarz;
  if (name == "adaptive") return WeightAlgorithm::Adaptive;
  throw ValidationError("unknown algorithm '" + name +
                        "' (expected rls, kaczmarz or adaptive)");
}

std::string algorithm_name(WeightAlgorithm algorithm) {
  switch (algorithm) {
    case WeightAlgorithm::Rls: return "rls";
    case WeightAlgorithm::Kaczmarz: return "kaczmarz";
    case WeightAlgorithm::Adaptive: return "adaptive";
  }
  return "kaczmarz";
}

CenterStepRule center_rule_from_name(const std::string& name) {
  if (name == "kmeans") return CenterStepRule::KMeans;
  if (name == "kohonen") return CenterStepRule::Kohonen;
  throw ValidationError("unknown center_rule '" + name + "' (expected kmeans or kohonen)");
}

std::string center_rule_name(CenterStepRule rule) {
  return rule == CenterStepRule::KMeans ? "kmeans" : "kohonen";
}

template <typename T>
T get_or(const nlohmann::json& json, const char* key, T fallback) {
  if (!json.contains(key)) {
    return fallback;
  }
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("config key '") + key + "' has the wrong type");
  }
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& json) {
  if (!json.is_object()) {
    throw ValidationError("experiment config must be a JSON object");
  }
  static const std::set<std::string> known_keys = {
      "h",          "sigma",         "algorithm", "beta",     "p_init",
      "p0",         "center_rule",   "center_beta", "center_p_init",
      "freeze_centers", "split",     "horizon",   "lags",     "seed",
      "count",      "mg_beta",       "mg_gamma",  "mg_n",     "mg_tau",
      "mg_dt",      "mg_x0"};
  for (const auto& item : json.items()) {
    if (!known_keys.contains(item.key())) {
      throw ValidationError("unknown config key '" + item.key() + "'");
    }
  }

  ExperimentConfig config;
  config.lags = get_or<std::vector<int>>(json, "lags", {1, 2, 3});
  config.model.input_dim = static_cast<int>(config.lags.size());
  config.model.rule_count = get_or<int>(json, "h", 5);
  config.model.sigma =
      json.contains("sigma") ? get_or<double>(json, "sigma", 0.0)
                             : default_sigma(config.model.rule_count);
  config.learner.algorithm =
      algorithm_from_name(get_or<std::string>(json, "algorithm", "kaczmarz"));
  config.learner.beta = get_or<double>(json, "beta", 1.0);
  config.learner.covariance_init = get_or<double>(json, "p_init", 1e4);
  config.learner.accumulator_init = get_or<double>(json, "p0", 1.0);
  config.center_rule.rule =
      center_rule_from_name(get_or<std::string>(json, "center_rule", "kmeans"));
  config.center_rule.beta = get_or<double>(json, "center_beta", 1.0);
  config.center_rule.accumulator_init = get_or<double>(json, "center_p_init", 1.0);
  config.freeze_centers = get_or<bool>(json, "freeze_centers", false);
  config.split = get_or<double>(json, "split", 0.4);
  config.horizon = get_or<int>(json, "horizon", 14);
  config.seed = get_or<std::uint64_t>(json, "seed", 0);
  config.sample_count = get_or<std::size_t>(json, "count", 1600);
  config.mackey_glass.beta = get_or<double>(json, "mg_beta", 0.2);
  config.mackey_glass.gamma = get_or<double>(json, "mg_gamma", 0.1);
  config.mackey_glass.exponent = get_or<double>(json, "mg_n", 10.0);
  config.mackey_glass.tau = get_or<double>(json, "mg_tau", 17.0);
  config.mackey_glass.dt = get_or<double>(json, "mg_dt", 0.1);
  config.mackey_glass.x0 = get_or<double>(json, "mg_x0", 1.2);
  config.validate();
  return config;
}

nlohmann::json config_to_json(const ExperimentConfig& config) {
  return nlohmann::json{
      {"h", config.model.rule_count},
      {"sigma", config.model.sigma},
      {"algorithm", algorithm_name(config.learner.algorithm)},
      {"beta", config.learner.beta},
      {"p_init", config.learner.covariance_init},
      {"p0", config.learner.accumulator_init},
      {"center_rule", center_rule_name(config.center_rule.rule)},
      {"center_beta", config.center_rule.beta},
      {"center_p_init", config.center_rule.accumulator_init},
      {"freeze_centers", config.freeze_centers},
      {"split", config.split},
      {"horizon", config.horizon},
      {"lags", config.lags},
      {"seed", config.seed},
      {"count", config.sample_count},
      {"mg_beta", config.mackey_glass.beta},
      {"mg_gamma", config.mackey_glass.gamma},
      {"mg_n", config.mackey_glass.exponent},
      {"mg_tau", config.mackey_glass.tau},
      {"mg_dt", config.mackey_glass.dt},
      {"mg_x0", config.mackey_glass.x0},
  };
}

nlohmann::json metrics_to_json(const ForecastReport& report) {
  nlohmann::json metrics;
  metrics["mape"] = report.mape ? nlohmann::json(*report.mape) : nlohmann::json();
  metrics["rmse"] = report.rmse;
  metrics["nrmse"] = report.nrmse ? nlohmann::json(*report.nrmse) : nlohmann::json();
  metrics["steps"] = report.rows.size();
  return metrics;
}

}  // namespace detail

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& error) {
    throw ValidationError(std::string("config is not valid JSON: ") + error.what());
  }
  return detail::config_from_json(json);
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str());
}

std::string experiment_config_json(const ExperimentConfig& config) {
  return detail::config_to_json(config).dump(2);
}

}  // namespace fuzzcast
