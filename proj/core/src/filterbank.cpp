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

#include "sonotex/filterbank.hpp"

#include <cmath>
#include <cstdio>
#include <cstdint>

#include "sonotex/errors.hpp"

namespace sonotex {

void FilterbankConfig::validate() const {
  if (sample_rate <= 0) throw ConfigError("sample_rate must be > 0");
  if (!(f_min > 0.0)) throw ConfigError("f_min must be > 0");
  if (!(f_min < f_max)) throw ConfigError("f_min must be < f_max");
  if (f_max > 0.5 * sample_rate)
    throw ConfigError("f_max exceeds the Nyquist frequency");
  if (n_seg < 2) throw ConfigError("n_seg must be >= 2");
  if (gamma_order < 2) throw ConfigError("gamma order must be >= 2");
  if (!(b1 > 0.0) || !(erb0 > 0.0) || erb1 < 0.0)
    throw ConfigError("bandwidth parameters must be positive");
  if (!(t_max_s > 0.0)) throw ConfigError("t_max_s must be > 0");
  if (decimation_pre < 1 || decimation_post < 1)
    throw ConfigError("decimation factors must be >= 1");
  if (filter_length() < 2) throw ConfigError("filter length too short");
}

int FilterbankConfig::filter_length() const {
  return static_cast<int>(std::floor(t_max_s * sample_rate + 1e-9));
}

double FilterbankConfig::channel_frequency(int index) const {
  const double alpha = std::log(f_max / f_min);
  const double s = static_cast<double>(index + 1);
  return f_min * std::exp(alpha * (2.0 * s - 1.0) / (2.0 * n_seg));
}

std::vector<double> FilterbankConfig::channel_frequencies() const {
  std::vector<double> out(static_cast<std::size_t>(n_seg));
  for (int i = 0; i < n_seg; ++i) out[static_cast<std::size_t>(i)] = channel_frequency(i);
  return out;
}

std::string FilterbankConfig::hash() const {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "n_seg=%d;f_min=%.17g;f_max=%.17g;n=%d;b1=%.17g;c1=%.17g;"
                "erb0=%.17g;erb1=%.17g;t_max=%.17g;fs=%d;dpre=%d;dpost=%d",
                n_seg, f_min, f_max, gamma_order, b1, c1, erb0, erb1, t_max_s,
                sample_rate, decimation_pre, decimation_post);
  // FNV-1a, 64 bit
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char* p = buf; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 0x100000001b3ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

GammachirpFilter build_gammachirp(const FilterbankConfig& config, int index) {
  config.validate();
  if (index < 0 || index >= config.n_seg)
    throw ConfigError("channel index out of range");

  const double f = config.channel_frequency(index);
  const int len = config.filter_length();
  const double erb = config.erb1 * f + config.erb0;
  const double decay = 2.0 * M_PI * config.b1 * erb;

  GammachirpFilter filt;
  filt.channel_index = index;
  filt.center_frequency = f;
  filt.coefficients.resize(static_cast<std::size_t>(len));
  filt.coefficients[0] = 0.0;

  double energy = 0.0;
  for (int k = 1; k < len; ++k) {
    const double t = static_cast<double>(k) / config.sample_rate;
    const double env =
        std::pow(t, config.gamma_order - 1) * std::exp(-decay * t);
    const double phase = 2.0 * M_PI * f * t + config.c1 * std::log(t);
    filt.coefficients[static_cast<std::size_t>(k)] = std::polar(env, phase);
    energy += env * env;
  }
  filt.normalization = 1.0 / (f * std::sqrt(energy));
  for (auto& c : filt.coefficients) c *= filt.normalization;
  return filt;
}

std::vector<GammachirpFilter> build_filterbank(const FilterbankConfig& config) {
  config.validate();
  std::vector<GammachirpFilter> bank;
  bank.reserve(static_cast<std::size_t>(config.n_seg));
  for (int i = 0; i < config.n_seg; ++i) bank.push_back(build_gammachirp(config, i));
  return bank;
}

std::vector<std::complex<double>> convolve_direct(
    const std::vector<double>& samples, const GammachirpFilter& filter) {
  const std::size_t n = samples.size();
  const std::size_t m = filter.coefficients.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> acc = 0.0;
    const std::size_t kmax = std::min(m - 1, i);
    for (std::size_t k = 1; k <= kmax; ++k)
      acc += filter.coefficients[k] * samples[i - k];
    out[i] = acc;
  }
  return out;
}

}  // namespace sonotex
