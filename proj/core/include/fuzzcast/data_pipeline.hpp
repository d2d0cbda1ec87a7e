#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fuzzcast/errors.hpp"

namespace fuzzcast {

/// Affine map between source units and the model's [-1, 1] working range.
/// The observed minimum maps to -1, the maximum to +1.
struct NormalizationMap {
  double observed_min = -1.0;
  double observed_max = 1.0;

  double normalize(double value) const {
    return -1.0 + 2.0 * (value - observed_min) / (observed_max - observed_min);
  }
  double denormalize(double value) const {
    return observed_min + 0.5 * (value + 1.0) * (observed_max - observed_min);
  }
};

struct NormalizedSeries {
  std::vector<double> values;  // in [-1, 1]
  NormalizationMap map;
};

/// Min-max normalization onto [-1, 1]. Throws DataError for a series with
/// fewer than two distinct values (the map would be degenerate).
NormalizedSeries normalize_series(const std::vector<double>& series);

/// Lag-embedded (input, target) pairs in chronological order. Sample k has
/// input components series[k - lag], one per lag in the given order, and
/// target series[k].
struct TimeSeriesFrame {
  std::vector<Eigen::VectorXd> inputs;
  std::vector<double> targets;
  std::vector<int> target_indices;  ///< position of each target in the source series
  std::vector<int> lags;

  std::size_t size() const { return targets.size(); }
};

TimeSeriesFrame embed(const std::vector<double>& series, const std::vector<int>& lags);

/// Parameters of the delay differential generator
///   dx/dt = beta x(t - tau) / (1 + x(t - tau)^exponent) - gamma x(t)
/// with constant history x0 before t = 0. Defaults are the classic
/// chaotic-regime constants.
struct MackeyGlassParams {
  double beta = 0.2;
  double gamma = 0.1;
  double exponent = 10.0;
  double tau = 17.0;  ///< delay; must be an integer multiple of dt
  double dt = 0.1;    ///< integration step
  double x0 = 1.2;    ///< constant initial history value

  void validate() const;
};

/// Integrates the generator with the classical fourth-order Runge-Kutta
/// scheme and returns `count` samples at unit time spacing, starting at
/// t = 0. The delayed term is evaluated per stage: history grid points are
/// used directly at whole steps and a cubic Hermite interpolant over one
/// past grid cell supplies the half-step values, which preserves the
/// scheme's fourth-order self-convergence. With tau = 0 the equation is
/// integrated as a plain ODE.
std::vector<double> generate_mackey_glass(const MackeyGlassParams& params,
                                          std::size_t count);

/// Reads a single-column numeric CSV with one header row. A malformed row
/// raises DataError naming the line number; a missing file raises DataError.
std::vector<double> read_series_csv(const std::filesystem::path& path);

/// Writes one header row followed by one value per line.
void write_series_csv(const std::filesystem::path& path, const std::vector<double>& values,
                      const std::string& header = "value");

struct ForecastRow {
  double time = 0.0;
  double actual = 0.0;
  double predicted = 0.0;
};

/// Three-column CSV: time, actual, predicted.
void write_forecast_csv(const std::filesystem::path& path,
                        const std::vector<ForecastRow>& rows);

}  // namespace fuzzcast
