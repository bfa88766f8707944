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

#include "sonotex/calibration.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "sonotex/errors.hpp"

namespace sonotex {

namespace {

struct LagStep {
  int dt = 0;
  int df = 0;
};

LagStep step_for(Direction d) {
  switch (d) {
    case Direction::time_minus: return {-1, 0};
    case Direction::time_plus: return {+1, 0};
    case Direction::freq_minus: return {0, -1};
    case Direction::freq_plus: return {0, +1};
  }
  return {};
}

}  // namespace

double correlation_at(const Cochleagram& c, int channel, int dt, int df) {
  const auto frames = c.frames();
  const auto channels = c.channels();
  if (channel < 0 || channel >= channels)
    throw ConfigError("channel out of range");
  const int other = channel + df;
  if (other < 0 || other >= channels)
    throw ConfigError("shifted channel out of range");

  const auto t_begin = static_cast<Eigen::Index>(std::max(0, -dt));
  const auto t_end = frames - static_cast<Eigen::Index>(std::max(0, dt));
  const auto count = t_end - t_begin;
  if (count < 2) throw DataError("too few overlapping frames for correlation");

  const double* a = c.log_energy.col(channel).data() + t_begin;
  const double* b = c.log_energy.col(other).data() + t_begin + dt;

  double sa = 0.0, sb = 0.0;
  for (Eigen::Index i = 0; i < count; ++i) {
    sa += a[i];
    sb += b[i];
  }
  const double ma = sa / static_cast<double>(count);
  const double mb = sb / static_cast<double>(count);
  double vaa = 0.0, vbb = 0.0, vab = 0.0;
  for (Eigen::Index i = 0; i < count; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    vaa += da * da;
    vbb += db * db;
    vab += da * db;
  }
  if (vaa <= 0.0 || vbb <= 0.0)
    throw DataError("degenerate (zero variance) channel in correlation");
  return vab / (std::sqrt(vaa) * std::sqrt(vbb));
}

CorrelationCurve correlation_curve(const Cochleagram& c, int channel,
                                   Direction direction, int max_lag) {
  if (max_lag < 0) throw ConfigError("max_lag must be >= 0");
  if (max_lag >= c.frames() / 10)
    throw ConfigError("max_lag too large for the number of frames");
  const LagStep step = step_for(direction);
  if (step.df != 0) {
    const int last = channel + step.df * max_lag;
    if (last < 0 || last >= c.channels())
      throw ConfigError("frequency lag range leaves the channel grid");
  }

  CorrelationCurve curve;
  curve.channel = channel;
  curve.direction = direction;
  curve.lags.reserve(static_cast<std::size_t>(max_lag) + 1);
  curve.values.reserve(static_cast<std::size_t>(max_lag) + 1);
  for (int k = 0; k <= max_lag; ++k) {
    curve.lags.push_back(k);
    curve.values.push_back(correlation_at(c, channel, step.dt * k, step.df * k));
  }
  return curve;
}

double interpolate_crossing(double r_prev, double r_below, double theta,
                            int first_below) {
  return (first_below - 1) + (r_prev - theta) / (r_prev - r_below);
}

namespace {

// Walks outward until R drops under theta; empty when the search range (or
// the channel grid) is exhausted first.
std::optional<double> find_crossing(const Cochleagram& c, int channel,
                                    Direction direction, int max_lag,
                                    double theta) {
  const LagStep step = step_for(direction);
  double prev = 1.0;  // R at lag 0, by definition of the estimator
  for (int k = 1; k <= max_lag; ++k) {
    const int df = step.df * k;
    const int other = channel + df;
    if (step.df != 0 && (other < 0 || other >= c.channels())) return {};
    const double r = correlation_at(c, channel, step.dt * k, df);
    if (r < theta) return interpolate_crossing(prev, r, theta, k);
    prev = r;
  }
  return {};
}

}  // namespace

CorrelationProfile estimate_profile(const Cochleagram& noise_cochleagram,
                                    const FilterbankConfig& config,
                                    const NoiseSpec& noise_spec,
                                    double theta,
                                    std::vector<std::string>* warnings) {
  if (!(theta > 0.0 && theta < 1.0))
    throw ConfigError("theta must lie in (0, 1)");
  const double duration =
      static_cast<double>(noise_cochleagram.frames()) / noise_cochleagram.frame_rate;
  if (duration < 60.0)
    throw CalibrationError("calibration needs at least 60 s of noise, got " +
                           std::to_string(duration) + " s");
  if (duration < 200.0 && warnings != nullptr)
    warnings->push_back("calibration noise shorter than the reference 200 s (" +
                        std::to_string(duration) + " s)");
  if (noise_cochleagram.channels() != config.n_seg)
    throw CalibrationError("cochleagram channel count does not match config");

  int max_time_lag = static_cast<int>(
      std::ceil(2.0 * config.t_max_s * noise_cochleagram.frame_rate));
  max_time_lag = std::min<int>(max_time_lag,
                               static_cast<int>(noise_cochleagram.frames() / 10) - 1);

  CorrelationProfile profile;
  profile.config_hash = config.hash();
  profile.theta = theta;
  profile.noise_spec = noise_spec;
  profile.duration_s = duration;
  profile.channels.resize(static_cast<std::size_t>(config.n_seg));

  for (int ch = 0; ch < config.n_seg; ++ch) {
    auto& cal = profile.channels[static_cast<std::size_t>(ch)];
    cal.index = ch;
    cal.frequency_hz = noise_cochleagram.channel_frequencies[static_cast<std::size_t>(ch)];

    const auto et = find_crossing(noise_cochleagram, ch, Direction::time_minus,
                                  max_time_lag, theta);
    const auto etu = find_crossing(noise_cochleagram, ch, Direction::time_plus,
                                   max_time_lag, theta);
    if (!et || !etu)
      throw CalibrationError(
          "no sub-threshold time-direction crossing for channel " +
          std::to_string(ch) + " within " + std::to_string(max_time_lag) +
          " frames");
    cal.eps_t = *et;
    cal.eps_t_up = *etu;
    cal.eps_f = find_crossing(noise_cochleagram, ch, Direction::freq_minus,
                              kMaxFreqLag, theta);
    cal.eps_f_up = find_crossing(noise_cochleagram, ch, Direction::freq_plus,
                                 kMaxFreqLag, theta);
  }
  return profile;
}

namespace {

nlohmann::json noise_spec_to_json(const NoiseSpec& s) {
  return {{"n_trials", s.n_trials},
          {"p", s.p},
          {"offset", s.offset},
          {"duration_s", s.duration_s},
          {"seed", s.seed}};
}

NoiseSpec noise_spec_from_json(const nlohmann::json& j) {
  NoiseSpec s;
  s.n_trials = j.at("n_trials").get<int>();
  s.p = j.at("p").get<double>();
  s.offset = j.at("offset").get<int>();
  s.duration_s = j.at("duration_s").get<double>();
  s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

}  // namespace

void save_profile(const CorrelationProfile& profile,
                  const std::filesystem::path& path) {
  nlohmann::json channels = nlohmann::json::array();
  for (const auto& c : profile.channels) {
    nlohmann::json jc = {{"index", c.index},
                         {"frequency_hz", c.frequency_hz},
                         {"eps_t", c.eps_t},
                         {"eps_t_up", c.eps_t_up}};
    jc["eps_f"] = c.eps_f ? nlohmann::json(*c.eps_f) : nlohmann::json(nullptr);
    jc["eps_f_up"] =
        c.eps_f_up ? nlohmann::json(*c.eps_f_up) : nlohmann::json(nullptr);
    channels.push_back(std::move(jc));
  }
  const nlohmann::json j = {{"schema_version", profile.schema_version},
                            {"config_hash", profile.config_hash},
                            {"theta", profile.theta},
                            {"noise_spec", noise_spec_to_json(profile.noise_spec)},
                            {"duration_s", profile.duration_s},
                            {"channels", std::move(channels)}};
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f << j.dump(2) << '\n';
  if (!f) throw IoError("write failed: " + path.string());
}

CorrelationProfile load_profile(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path.string());
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CalibrationError("profile is not valid JSON: " + std::string(e.what()));
  }
  try {
    CorrelationProfile p;
    p.schema_version = j.at("schema_version").get<int>();
    if (p.schema_version != 1)
      throw CalibrationError("unsupported profile schema version " +
                             std::to_string(p.schema_version));
    p.config_hash = j.at("config_hash").get<std::string>();
    p.theta = j.at("theta").get<double>();
    p.noise_spec = noise_spec_from_json(j.at("noise_spec"));
    p.duration_s = j.at("duration_s").get<double>();
    for (const auto& jc : j.at("channels")) {
      ChannelCalibration c;
      c.index = jc.at("index").get<int>();
      c.frequency_hz = jc.at("frequency_hz").get<double>();
      c.eps_t = jc.at("eps_t").get<double>();
      c.eps_t_up = jc.at("eps_t_up").get<double>();
      if (!jc.at("eps_f").is_null()) c.eps_f = jc.at("eps_f").get<double>();
      if (!jc.at("eps_f_up").is_null())
        c.eps_f_up = jc.at("eps_f_up").get<double>();
      p.channels.push_back(std::move(c));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw CalibrationError("profile schema mismatch: " + std::string(e.what()));
  }
}

CorrelationProfile load_profile(const std::filesystem::path& path,
                                const std::string& expected_config_hash) {
  CorrelationProfile p = load_profile(path);
  if (p.config_hash != expected_config_hash)
    throw CalibrationError(
        "profile was calibrated for a different filterbank configuration "
        "(hash " + p.config_hash + ", expected " + expected_config_hash +
        "); recalibrate or adjust the configuration");
  return p;
}

}  // namespace sonotex
