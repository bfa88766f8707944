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

#ifndef SONOTEX_TEXTURE_HPP_
#define SONOTEX_TEXTURE_HPP_

#include <string>
#include <vector>

#include "sonotex/calibration.hpp"
#include "sonotex/cochleagram.hpp"

namespace sonotex {

// Averaging-region scales relative to the correlation distances: c_p along
// the pattern axis (kept below one correlation distance), c_t along the
// tract axis (stretched beyond it).
struct TractParams {
  double c_p = 0.7;
  double c_t = 2.0;

  void validate(std::vector<std::string>* warnings = nullptr) const;
};

enum class CsrInterpolation {
  linear,  // fractional offsets sampled by linear interpolation
  nearest, // fractional offsets rounded to the nearest cell
};

// Oriented center-surround ratios. o_h subtracts the mean of the two
// log-energy samples one correlation distance away along time; o_v does the
// same along the channel axis. Cells whose stencil leaves the grid, and
// channels without frequency-direction distances (o_v only), are invalid.
struct CenterSurroundMaps {
  Eigen::MatrixXd o_h, o_v;   // frames x channels, dB
  MaskXb o_h_valid, o_v_valid;
};

CenterSurroundMaps center_surround(
    const Cochleagram& cochleagram, const CorrelationProfile& profile,
    CsrInterpolation interpolation = CsrInterpolation::linear);

// Half-extents of the diamond averaging region around a cell, in grid units
// (frames along time, channel steps along frequency). All four must be > 0.
struct DiamondExtents {
  double t_minus = 0.0, t_plus = 0.0;
  double f_minus = 0.0, f_plus = 0.0;
};

struct CellOffset {
  int dt = 0;
  int df = 0;
  friend bool operator==(const CellOffset&, const CellOffset&) = default;
};

// Grid cells (unit weight each) whose centers lie inside the closed
// quadrilateral spanned by the four extent vertices. Cells are listed in
// (df, dt) ascending order; the center cell is always a member, and when
// every extent is below one cell the region degenerates to the center
// alone.
std::vector<CellOffset> diamond_cells(const DiamondExtents& extents);

// CSR maps plus the tract features computed from them. t_vert is the
// root-mean-square of o_h over a frequency-elongated diamond (pulse
// evidence); t_horiz the RMS of o_v over a time-elongated diamond (tone
// evidence). A cell is valid only when its whole diamond lies on valid
// source cells.
struct TextureMaps {
  Eigen::MatrixXd o_h, o_v, t_vert, t_horiz;
  MaskXb o_h_valid, o_v_valid, t_vert_valid, t_horiz_valid;

  Eigen::Index frames() const { return o_h.rows(); }
  Eigen::Index channels() const { return o_h.cols(); }
};

TextureMaps tract_features(CenterSurroundMaps csr,
                           const CorrelationProfile& profile,
                           const TractParams& params);

// center_surround followed by tract_features.
TextureMaps compute_texture(
    const Cochleagram& cochleagram, const CorrelationProfile& profile,
    const TractParams& params = {},
    CsrInterpolation interpolation = CsrInterpolation::linear);

// Valid cells of a map, flattened column by column.
std::vector<double> valid_values(const Eigen::MatrixXd& map, const MaskXb& mask);

}  // namespace sonotex

#endif  // SONOTEX_TEXTURE_HPP_
