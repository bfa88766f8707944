// Copyright 2026 The Sonotex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SONOTEX_CALIBRATION_HPP_
#define SONOTEX_CALIBRATION_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sonotex/cochleagram.hpp"

namespace sonotex {

enum class Direction { time_minus, time_plus, freq_minus, freq_plus };

// Normalized correlation between the log-energy series of `channel` and the
// series shifted by (dt frames, df channels). Means and population standard
// deviations are taken over the frames where both series are defined, so the
// value is a plain Pearson coefficient and |R| <= 1 up to rounding.
// Throws DataError if either window has zero variance, ConfigError if the
// shifted channel leaves the grid.
double correlation_at(const Cochleagram& c, int channel, int dt, int df);

struct CorrelationCurve {
  int channel = 0;
  Direction direction = Direction::time_plus;
  std::vector<int> lags;       // 0..max_lag
  std::vector<double> values;  // values[0] == 1
};

// R at lags 0..max_lag along one direction. max_lag must stay below a tenth
// of the frame count, and within the channel range for the frequency
// directions.
CorrelationCurve correlation_curve(const Cochleagram& c, int channel,
                                   Direction direction, int max_lag);

// Linear interpolation between the last supra-threshold lag and the first
// sub-threshold lag. `first_below` is the integer lag where the curve first
// drops under theta.
double interpolate_crossing(double r_prev, double r_below, double theta,
                            int first_below);

// Correlation distances of one channel, in frames (time) and channel steps
// (frequency). Frequency-direction distances are absent where no
// sub-threshold crossing exists inside the search range (band edges).
struct ChannelCalibration {
  int index = 0;  // 0-based
  double frequency_hz = 0.0;
  double eps_t = 0.0;     // toward the past
  double eps_t_up = 0.0;  // toward the future
  std::optional<double> eps_f;     // toward lower channels
  std::optional<double> eps_f_up;  // toward higher channels

  bool has_freq() const { return eps_f.has_value() && eps_f_up.has_value(); }
};

struct CorrelationProfile {
  int schema_version = 1;
  std::string config_hash;
  double theta = 0.2;
  NoiseSpec noise_spec;
  double duration_s = 0.0;  // noise duration the profile was estimated from
  std::vector<ChannelCalibration> channels;
};

inline constexpr int kMaxFreqLag = 20;  // channel-direction search bound

// Estimates all four correlation distances per channel from a white-noise
// cochleagram. Requires at least 60 s of noise; appends a warning below
// 200 s. A missing time-direction crossing is a CalibrationError; missing
// frequency-direction crossings at band edges are recorded as absent.
CorrelationProfile estimate_profile(const Cochleagram& noise_cochleagram,
                                    const FilterbankConfig& config,
                                    const NoiseSpec& noise_spec,
                                    double theta = 0.2,
                                    std::vector<std::string>* warnings = nullptr);

void save_profile(const CorrelationProfile& profile,
                  const std::filesystem::path& path);
CorrelationProfile load_profile(const std::filesystem::path& path);
// Loads and additionally checks the stored config hash.
CorrelationProfile load_profile(const std::filesystem::path& path,
                                const std::string& expected_config_hash);

}  // namespace sonotex

#endif  // SONOTEX_CALIBRATION_HPP_
