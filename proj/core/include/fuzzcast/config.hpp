#pragma once

#include <filesystem>
#include <string>

#include "fuzzcast/harness.hpp"

namespace fuzzcast {

/// Parses the flat JSON experiment configuration. Every key is optional and
/// falls back to its documented default; unknown keys are rejected.
/// When "sigma" is absent it defaults to the inter-center spacing
/// 2/(h - 1), and the model's input dimension is derived from "lags".
ExperimentConfig parse_experiment_config(const std::string& json_text);

ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Serializes a config with all defaults resolved (the summary echo).
std::string experiment_config_json(const ExperimentConfig& config);

}  // namespace fuzzcast
