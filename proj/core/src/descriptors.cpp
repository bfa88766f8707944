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

#include "sonotex/descriptors.hpp"

#include <cmath>
#include <limits>

#include "sonotex/errors.hpp"

namespace sonotex {

void DescriptorConfig::validate() const {
  if (!(gate_threshold > 0.0)) throw ConfigError("gate threshold must be > 0");
  if (!(gate_slope > 0.0)) throw ConfigError("gate slope must be > 0");
  if (!(log_base > 1.0)) throw ConfigError("log base must be > 1");
}

double sigmoid_gate(double x, double slope) {
  return 0.5 * (1.0 + std::tanh(2.0 * slope * x));
}

DescriptorTriple compute_descriptors(const TextureMaps& maps,
                                     const Cochleagram& cochleagram,
                                     const DescriptorConfig& config,
                                     const std::string& file_id) {
  config.validate();
  if (maps.frames() != cochleagram.frames() ||
      maps.channels() != cochleagram.channels())
    throw DataError("texture maps and cochleagram have different shapes");

  const double theta = config.gate_threshold;
  const double slope = config.gate_slope;
  const bool energy_mode = config.weighting == Weighting::energy;

  double sum_p = 0.0, sum_t = 0.0, sum_n = 0.0, total = 0.0;
  long long n_valid = 0;
  for (Eigen::Index c = 0; c < maps.channels(); ++c) {
    for (Eigen::Index t = 0; t < maps.frames(); ++t) {
      if (!maps.t_vert_valid(t, c) || !maps.t_horiz_valid(t, c)) continue;
      ++n_valid;
      const double w =
          energy_mode ? db_to_energy(cochleagram.log_energy(t, c)) : 1.0;
      const double gate_p = sigmoid_gate(maps.t_vert(t, c) - theta, slope);
      const double gate_t = sigmoid_gate(maps.t_horiz(t, c) - theta, slope);
      sum_p += gate_p * w;
      sum_t += gate_t * w;
      sum_n += (1.0 - gate_p) * (1.0 - gate_t) * w;
      total += w;
    }
  }
  if (n_valid == 0)
    throw DataError("no cell is valid in both tract maps; descriptors undefined");

  DescriptorTriple out;
  out.weighting = config.weighting;
  out.file_id = file_id;
  out.n_valid_cells = n_valid;

  const double log_total = std::log(total);
  const double inv_log_base = 1.0 / std::log(config.log_base);
  auto fraction_log = [&](double gated, const char* name) {
    if (gated <= 0.0) {
      out.warnings.push_back(std::string(name) +
                             " gated sum is zero; reporting -inf");
      return -std::numeric_limits<double>::infinity();
    }
    return (std::log(gated) - log_total) * inv_log_base;
  };
  out.pulsality = fraction_log(sum_p, "pulsality");
  out.tonality = fraction_log(sum_t, "tonality");
  out.noisiness = fraction_log(sum_n, "noisiness");
  return out;
}

}  // namespace sonotex
