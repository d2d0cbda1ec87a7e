#include "fuzzcast/data_pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <string_view>

namespace fuzzcast {

NormalizedSeries normalize_series(const std::vector<double>& series) {
  if (series.size() < 2) {
    throw DataError("normalize: need at least two values");
  }
  double lo = series.front();
  double hi = series.front();
  for (double value : series) {
    if (!std::isfinite(value)) {
      throw DataError("normalize: non-finite value in series");
    }
    lo = std::min(lo, value);
    hi = std::max(hi, value);
  }
  if (!(lo < hi)) {
    throw DataError("normalize: series has a degenerate value range");
  }
  NormalizedSeries normalized;
  normalized.map = NormalizationMap{lo, hi};
  normalized.values.reserve(series.size());
  for (double value : series) {
    normalized.values.push_back(normalized.map.normalize(value));
  }
  return normalized;
}

TimeSeriesFrame embed(const std::vector<double>& series, const std::vector<int>& lags) {
  if (lags.empty()) {
    throw ValidationError("embed: need at least one lag");
  }
  for (int lag : lags) {
    if (lag < 1) {
      throw ValidationError("embed: lags must be positive");
    }
  }
  const int max_lag = *std::max_element(lags.begin(), lags.end());
  if (series.size() <= static_cast<std::size_t>(max_lag)) {
    throw DataError("embed: series of length " + std::to_string(series.size()) +
                    " is too short for lag " + std::to_string(max_lag));
  }
  TimeSeriesFrame frame;
  frame.lags = lags;
  const std::size_t count = series.size() - static_cast<std::size_t>(max_lag);
  frame.inputs.reserve(count);
  frame.targets.reserve(count);
  frame.target_indices.reserve(count);
  for (std::size_t k = static_cast<std::size_t>(max_lag); k < series.size(); ++k) {
    Eigen::VectorXd input(static_cast<Eigen::Index>(lags.size()));
    for (std::size_t j = 0; j < lags.size(); ++j) {
      input[static_cast<Eigen::Index>(j)] = series[k - static_cast<std::size_t>(lags[j])];
    }
    frame.inputs.push_back(std::move(input));
    frame.targets.push_back(series[k]);
    frame.target_indices.push_back(static_cast<int>(k));
  }
  return frame;
}

void MackeyGlassParams::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("mackey-glass: dt must be positive and finite");
  }
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw ValidationError("mackey-glass: tau must be nonnegative and finite");
  }
  const double steps = tau / dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    throw ValidationError("mackey-glass: tau must be an integer multiple of dt");
  }
  if (!std::isfinite(beta) || !std::isfinite(gamma) || !std::isfinite(exponent) ||
      !std::isfinite(x0)) {
    throw ValidationError("mackey-glass: coefficients must be finite");
  }
}

namespace {

double mackey_glass_rhs(const MackeyGlassParams& params, double value, double delayed) {
  return params.beta * delayed / (1.0 + std::pow(delayed, params.exponent)) -
         params.gamma * value;
}

}  // namespace

std::vector<double> generate_mackey_glass(const MackeyGlassParams& params,
                                          std::size_t count) {
  params.validate();
  if (count == 0) {
    return {};
  }
  const double dt = params.dt;
  const long stride = std::max<long>(1, std::lround(1.0 / dt));
  const long delay = std::lround(params.tau / dt);
  const long steps = static_cast<long>(count - 1) * stride;

  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  grid[0] = params.x0;

  if (delay == 0) {
    // tau = 0 degenerates to an ODE; the delayed argument tracks each stage
    for (long m = 0; m < steps; ++m) {
      const double x = grid[static_cast<std::size_t>(m)];
      const double k1 = mackey_glass_rhs(params, x, x);
      const double x2 = x + 0.5 * dt * k1;
      const double k2 = mackey_glass_rhs(params, x2, x2);
      const double x3 = x + 0.5 * dt * k2;
      const double k3 = mackey_glass_rhs(params, x3, x3);
      const double x4 = x + dt * k3;
      const double k4 = mackey_glass_rhs(params, x4, x4);
      grid[static_cast<std::size_t>(m) + 1] = x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  } else {
    std::vector<double> slope(grid.size());  // dx/dt at grid points, filled as we go
    for (long m = 0; m < steps; ++m) {
      const double x = grid[static_cast<std::size_t>(m)];
      const long j = m - delay;
      const double delayed_start = j >= 0 ? grid[static_cast<std::size_t>(j)] : params.x0;
      const double delayed_end =
          j + 1 >= 0 ? grid[static_cast<std::size_t>(j + 1)] : params.x0;
      const double k1 = mackey_glass_rhs(params, x, delayed_start);
      slope[static_cast<std::size_t>(m)] = k1;
      // delayed value at the half step: constant history before t = 0,
      // otherwise a cubic Hermite interpolant over one already-computed cell
      double delayed_mid;
      if (j < 0) {
        delayed_mid = params.x0;
      } else {
        const double y0 = grid[static_cast<std::size_t>(j)];
        const double y1 = grid[static_cast<std::size_t>(j + 1)];
        const double d0 = slope[static_cast<std::size_t>(j)];
        const double d1 = slope[static_cast<std::size_t>(j + 1)];
        delayed_mid = 0.5 * (y0 + y1) + dt * (d0 - d1) / 8.0;
      }
      const double k2 = mackey_glass_rhs(params, x + 0.5 * dt * k1, delayed_mid);
      const double k3 = mackey_glass_rhs(params, x + 0.5 * dt * k2, delayed_mid);
      const double k4 = mackey_glass_rhs(params, x + dt * k3, delayed_end);
      grid[static_cast<std::size_t>(m) + 1] = x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }

  std::vector<double> samples(count);
  for (std::size_t s = 0; s < count; ++s) {
    samples[s] = grid[s * static_cast<std::size_t>(stride)];
  }
  return samples;
}

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

std::vector<double> read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw DataError(path.string() + ": empty file, expected a header row");
  }
  std::vector<double> values;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view token = trim(line);
    if (token.empty()) {
      continue;  // tolerate blank lines (trailing newline in particular)
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw DataError(path.string() + ": parse error at line " +
                      std::to_string(line_number) + ": '" + std::string(token) + "'");
    }
    values.push_back(value);
  }
  return values;
}

void write_series_csv(const std::filesystem::path& path, const std::vector<double>& values,
                      const std::string& header) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write " + path.string());
  }
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << header << '\n';
  for (double value : values) {
    out << value << '\n';
  }
  if (!out) {
    throw DataError("failed while writing " + path.string());
  }
}

void write_forecast_csv(const std::filesystem::path& path,
                        const std::vector<ForecastRow>& rows) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write " + path.string());
  }
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "time,actual,predicted\n";
  for (const ForecastRow& row : rows) {
    out << row.time << ',' << row.actual << ',' << row.predicted << '\n';
  }
  if (!out) {
    throw DataError("failed while writing " + path.string());
  }
}

}  // namespace fuzzcast
