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

#ifndef SONOTEX_DESCRIPTORS_HPP_
#define SONOTEX_DESCRIPTORS_HPP_

#include <string>
#include <vector>

#include "sonotex/texture.hpp"

namespace sonotex {

enum class Weighting { energy, area };

inline const char* to_string(Weighting w) {
  return w == Weighting::energy ? "energy" : "area";
}

struct DescriptorConfig {
  double gate_threshold = 8.0;  // tract level considered structure, dB
  double gate_slope = 2.5;      // sigmoid slope at the threshold
  Weighting weighting = Weighting::energy;
  double log_base = 10.0;

  void validate() const;
};

// File-level pulsality / tonality / noisiness: logarithms of gated energy
// (or area) fractions, each <= 0. A gated sum of exactly zero yields a
// -infinity sentinel plus a warning instead of a clamped value.
struct DescriptorTriple {
  double pulsality = 0.0;
  double tonality = 0.0;
  double noisiness = 0.0;
  Weighting weighting = Weighting::energy;
  std::string file_id;
  long long n_valid_cells = 0;
  std::vector<std::string> warnings;
};

// (1 + tanh(2 * slope * x)) / 2: value 1/2 at x = 0, derivative `slope`
// there, saturating to the hard gate away from the threshold.
double sigmoid_gate(double x, double slope);

// Collapses the tract maps over the cells where both maps are valid.
// Weights are linear energy recovered from the cochleagram (energy mode)
// or 1 per cell (area mode).
DescriptorTriple compute_descriptors(const TextureMaps& maps,
                                     const Cochleagram& cochleagram,
                                     const DescriptorConfig& config,
                                     const std::string& file_id = {});

}  // namespace sonotex

#endif  // SONOTEX_DESCRIPTORS_HPP_
