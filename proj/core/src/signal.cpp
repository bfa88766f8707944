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

#include "sonotex/signal.hpp"

#include <cmath>
#include <random>

#include "sonotex/errors.hpp"

namespace sonotex {

void Signal::validate() const {
  if (samples.empty()) throw ConfigError("signal has no samples");
  if (sample_rate <= 0) throw ConfigError("signal sample rate must be > 0");
  for (double v : samples) {
    if (!std::isfinite(v)) throw ConfigError("signal contains non-finite sample");
  }
}

void NoiseSpec::validate() const {
  if (n_trials <= 0) throw ConfigError("noise n_trials must be > 0");
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("noise p must lie in (0, 1)");
  if (!(duration_s > 0.0)) throw ConfigError("noise duration must be > 0");
}

namespace {

// One binomial draw = n_trials Bernoulli draws on the 53-bit uniform grid.
// Spelled out (rather than std::binomial_distribution) so the sequence is
// identical across standard library implementations.
class BinomialSource {
 public:
  BinomialSource(const NoiseSpec& spec)
      : rng_(spec.seed), n_(spec.n_trials), p_(spec.p), offset_(spec.offset) {}

  double next() {
    int count = 0;
    for (int i = 0; i < n_; ++i) {
      const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
      if (u < p_) ++count;
    }
    return static_cast<double>(count - offset_);
  }

 private:
  std::mt19937_64 rng_;
  int n_;
  double p_;
  int offset_;
};

}  // namespace

Signal generate_white_noise(const NoiseSpec& spec, int sample_rate) {
  spec.validate();
  if (sample_rate <= 0) throw ConfigError("sample rate must be > 0");
  const auto n = static_cast<std::size_t>(
      std::floor(spec.duration_s * sample_rate + 1e-9));
  if (n == 0) throw ConfigError("noise duration too short at this sample rate");

  Signal out;
  out.sample_rate = sample_rate;
  out.samples.resize(n);
  BinomialSource src(spec);
  for (auto& v : out.samples) v = src.next();
  return out;
}

Signal add_noise_floor(const Signal& signal, const NoiseSpec& spec) {
  signal.validate();
  spec.validate();
  Signal out = signal;
  BinomialSource src(spec);
  for (auto& v : out.samples) v += src.next();
  return out;
}

Signal synthesize_archetype(ArchetypeKind kind, double param_hz,
                            double duration_s, double amplitude,
                            int sample_rate) {
  if (sample_rate <= 0) throw ConfigError("sample rate must be > 0");
  if (!(duration_s > 0.0)) throw ConfigError("archetype duration must be > 0");
  const auto n = static_cast<std::size_t>(
      std::floor(duration_s * sample_rate + 1e-9));

  Signal out;
  out.sample_rate = sample_rate;
  out.samples.assign(n, 0.0);

  switch (kind) {
    case ArchetypeKind::tone: {
      if (!(param_hz > 0.0) || param_hz >= 0.5 * sample_rate)
        throw ConfigError("tone frequency must lie in (0, sample_rate/2)");
      const double w = 2.0 * M_PI * param_hz / sample_rate;
      for (std::size_t k = 0; k < n; ++k)
        out.samples[k] = amplitude * std::sin(w * static_cast<double>(k));
      break;
    }
    case ArchetypeKind::click_train: {
      if (!(param_hz > 0.0) || param_hz >= 0.5 * sample_rate)
        throw ConfigError("click rate must lie in (0, sample_rate/2)");
      const double period = sample_rate / param_hz;
      for (std::size_t i = 0;; ++i) {
        const auto pos = static_cast<std::size_t>(
            std::llround(static_cast<double>(i) * period));
        if (pos >= n) break;
        out.samples[pos] = amplitude;
      }
      break;
    }
    case ArchetypeKind::silence:
      break;
  }
  return out;
}

}  // namespace sonotex
