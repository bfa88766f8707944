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

#ifndef SONOTEX_COCHLEAGRAM_HPP_
#define SONOTEX_COCHLEAGRAM_HPP_

#include <Eigen/Core>
#include <string>
#include <vector>

#include "sonotex/filterbank.hpp"
#include "sonotex/signal.hpp"

namespace sonotex {

using MaskXb = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Decimated log-energy time-frequency representation. Storage is
// column-major, one column per channel, so a channel's time series is
// contiguous.
struct Cochleagram {
  Eigen::MatrixXd log_energy;  // frames x channels, dB
  double frame_rate = 0.0;
  std::vector<double> channel_frequencies;
  std::string source_id;

  Eigen::Index frames() const { return log_energy.rows(); }
  Eigen::Index channels() const { return log_energy.cols(); }
};

inline double energy_to_db(double energy) { return 10.0 * std::log10(energy); }
inline double db_to_energy(double db) { return std::pow(10.0, db / 10.0); }

// Linear energy |A|^2 on the decimated grid (every decimation()-th sample
// of the full-rate causal convolution). The FFT overlap-add engine
// evaluates the convolution only at the kept positions; the result is
// sample-for-sample the plain-dropping decimation of the full convolution.
Eigen::MatrixXd compute_energy(const Signal& signal,
                               const FilterbankConfig& config);

// Full pipeline step: energy then dB. A cell with exactly zero energy is a
// DataError telling the caller to add a noise floor first.
Cochleagram compute_cochleagram(const Signal& signal,
                                const FilterbankConfig& config,
                                const std::string& source_id = {});

// Time of a frame center, seconds.
double frame_time(const Cochleagram& c, Eigen::Index frame_index);

}  // namespace sonotex

#endif  // SONOTEX_COCHLEAGRAM_HPP_
