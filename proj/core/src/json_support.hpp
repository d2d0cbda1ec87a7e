#pragma once

// Internal bridge between the public config/report types and their JSON
// form. Kept out of the public headers so installed consumers do not
// inherit the vendored json dependency.

#include <json.hpp>

#include "fuzzcast/harness.hpp"

namespace fuzzcast::detail {

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& json);
nlohmann::json metrics_to_json(const ForecastReport& report);

}  // namespace fuzzcast::detail
