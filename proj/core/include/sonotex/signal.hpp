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

#ifndef SONOTEX_SIGNAL_HPP_
#define SONOTEX_SIGNAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace sonotex {

// Mono sampled waveform. Sample values live on the 16-bit PCM integer
// scale (reading a full-scale file yields values in [-32768, 32767]).
struct Signal {
  std::vector<double> samples;
  int sample_rate = 0;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
  // Throws ConfigError unless samples are non-empty and finite and the
  // sample rate is positive.
  void validate() const;
};

// Binomial white-noise recipe: samples are drawn from B(n_trials, p) and
// shifted down by `offset`. The defaults give an integer-valued noise with
// mean 0 and variance n*p*(1-p) = 5.
struct NoiseSpec {
  int n_trials = 20;
  double p = 0.5;
  int offset = 10;
  double duration_s = 200.0;
  std::uint64_t seed = 1;

  void validate() const;  // throws ConfigError on out-of-range fields
};

// Deterministic for a fixed seed: each sample consumes exactly n_trials
// draws from a mt19937_64 seeded with spec.seed, counting draws whose
// 53-bit uniform value falls below p.
Signal generate_white_noise(const NoiseSpec& spec, int sample_rate);

// Element-wise sum of `signal` and a fresh noise realization of the same
// length, drawn from `spec` (spec.duration_s is ignored).
Signal add_noise_floor(const Signal& signal, const NoiseSpec& spec);

enum class ArchetypeKind { tone, click_train, silence };

// Test-signal generator: a sinusoid, a train of unit impulses scaled by
// `amplitude`, or zeros. `param_hz` is the tone frequency or the click
// rate; it must stay below the Nyquist frequency.
Signal synthesize_archetype(ArchetypeKind kind, double param_hz,
                            double duration_s, double amplitude,
                            int sample_rate);

}  // namespace sonotex

#endif  // SONOTEX_SIGNAL_HPP_
