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

#ifndef SONOTEX_FILTERBANK_HPP_
#define SONOTEX_FILTERBANK_HPP_

#include <complex>
#include <string>
#include <vector>

namespace sonotex {

// Gammachirp filterbank parameters. Channel center frequencies are spaced
// logarithmically:
//   f_s = f_min * exp(alpha * (2s - 1) / (2 * n_seg)),  alpha = ln(f_max/f_min)
// for s = 1..n_seg, so both band edges sit half a step outside the channels.
struct FilterbankConfig {
  int n_seg = 133;
  double f_min = 40.0;
  double f_max = 11025.0;
  int gamma_order = 4;       // the "n" in t^(n-1)
  double b1 = 0.707;         // bandwidth scale on the ERB law
  double c1 = -3.70;         // chirp factor on ln(t)
  double erb0 = 24.7;        // ERB intercept, Hz
  double erb1 = 0.0779;      // ERB slope per Hz
  double t_max_s = 0.4;      // filter truncation length, seconds
  int sample_rate = 44100;
  int decimation_pre = 2;    // plain sample dropping in the energy domain
  int decimation_post = 50;

  void validate() const;  // throws ConfigError when invariants fail

  int decimation() const { return decimation_pre * decimation_post; }
  double frame_rate() const {
    return static_cast<double>(sample_rate) / decimation();
  }
  int filter_length() const;                  // floor(t_max_s * sample_rate)
  double channel_frequency(int index) const;  // index is 0-based
  std::vector<double> channel_frequencies() const;

  // Stable hex digest over every field; recorded in calibration profiles and
  // output provenance headers so mismatched configurations are detected.
  std::string hash() const;
};

// One channel of the filterbank: complex impulse response samples at
// t_k = k / sample_rate, normalized so that sum |coefficients|^2 equals
// 1 / center_frequency^2. The k = 0 coefficient is exactly zero (the
// t^(n-1) factor kills it and with it the ln(t) singularity).
struct GammachirpFilter {
  int channel_index = 0;  // 0-based
  double center_frequency = 0.0;
  double normalization = 0.0;  // N_s applied to the raw coefficients
  std::vector<std::complex<double>> coefficients;
};

GammachirpFilter build_gammachirp(const FilterbankConfig& config, int index);
std::vector<GammachirpFilter> build_filterbank(const FilterbankConfig& config);

// Causal direct convolution of the signal with one filter, evaluated over
// the full signal length. This is the slow reference path the FFT engine is
// checked against.
std::vector<std::complex<double>> convolve_direct(
    const std::vector<double>& samples, const GammachirpFilter& filter);

}  // namespace sonotex

#endif  // SONOTEX_FILTERBANK_HPP_
