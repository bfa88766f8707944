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

#include "sonotex/texture.hpp"

#include <cmath>

#include "sonotex/errors.hpp"

namespace sonotex {

void TractParams::validate(std::vector<std::string>* warnings) const {
  if (!(c_p > 0.0) || !(c_t > 0.0))
    throw ConfigError("tract scales c_p and c_t must be > 0");
  if (warnings != nullptr) {
    if (c_p >= 1.0)
      warnings->push_back("c_p >= 1: pattern axis reaches beyond one correlation distance");
    if (c_t <= 1.0)
      warnings->push_back("c_t <= 1: tract axis does not exceed one correlation distance");
  }
}

namespace {

// Interpolated read along one column at a fractional frame position.
double sample_time(const Eigen::MatrixXd& x, Eigen::Index col, double pos,
                   CsrInterpolation mode) {
  if (mode == CsrInterpolation::nearest)
    return x(static_cast<Eigen::Index>(std::llround(pos)), col);
  const auto lo = static_cast<Eigen::Index>(std::floor(pos));
  const double w = pos - static_cast<double>(lo);
  if (w == 0.0) return x(lo, col);
  return (1.0 - w) * x(lo, col) + w * x(lo + 1, col);
}

// Interpolated read across columns at a fractional channel position.
double sample_channel(const Eigen::MatrixXd& x, Eigen::Index row, double pos,
                      CsrInterpolation mode) {
  if (mode == CsrInterpolation::nearest)
    return x(row, static_cast<Eigen::Index>(std::llround(pos)));
  const auto lo = static_cast<Eigen::Index>(std::floor(pos));
  const double w = pos - static_cast<double>(lo);
  if (w == 0.0) return x(row, lo);
  return (1.0 - w) * x(row, lo) + w * x(row, lo + 1);
}

}  // namespace

CenterSurroundMaps center_surround(const Cochleagram& cochleagram,
                                   const CorrelationProfile& profile,
                                   CsrInterpolation interpolation) {
  const auto frames = cochleagram.frames();
  const auto channels = cochleagram.channels();
  if (static_cast<Eigen::Index>(profile.channels.size()) != channels)
    throw CalibrationError("profile channel count does not match cochleagram");

  const Eigen::MatrixXd& x = cochleagram.log_energy;
  CenterSurroundMaps out;
  out.o_h = Eigen::MatrixXd::Zero(frames, channels);
  out.o_v = Eigen::MatrixXd::Zero(frames, channels);
  out.o_h_valid = MaskXb::Constant(frames, channels, false);
  out.o_v_valid = MaskXb::Constant(frames, channels, false);

  for (Eigen::Index c = 0; c < channels; ++c) {
    const auto& cal = profile.channels[static_cast<std::size_t>(c)];
    if (!(cal.eps_t > 0.0) || !(cal.eps_t_up > 0.0))
      throw CalibrationError("non-positive time correlation distance");

    // Temporal stencil: valid where both fractional offsets stay on the grid.
    const auto t0 = static_cast<Eigen::Index>(std::ceil(cal.eps_t));
    const auto t1 = frames - 1 - static_cast<Eigen::Index>(std::ceil(cal.eps_t_up));
    for (Eigen::Index t = t0; t <= t1; ++t) {
      const double past =
          sample_time(x, c, static_cast<double>(t) - cal.eps_t, interpolation);
      const double future =
          sample_time(x, c, static_cast<double>(t) + cal.eps_t_up, interpolation);
      out.o_h(t, c) = x(t, c) - 0.5 * (past + future);
      out.o_h_valid(t, c) = true;
    }

    // Channel stencil: needs frequency-direction distances and both
    // neighbors inside the band.
    if (!cal.has_freq()) continue;
    const double lo_pos = static_cast<double>(c) - *cal.eps_f;
    const double hi_pos = static_cast<double>(c) + *cal.eps_f_up;
    if (lo_pos < 0.0 || hi_pos > static_cast<double>(channels - 1)) continue;
    for (Eigen::Index t = 0; t < frames; ++t) {
      const double below = sample_channel(x, t, lo_pos, interpolation);
      const double above = sample_channel(x, t, hi_pos, interpolation);
      out.o_v(t, c) = x(t, c) - 0.5 * (below + above);
      out.o_v_valid(t, c) = true;
    }
  }
  return out;
}

std::vector<CellOffset> diamond_cells(const DiamondExtents& e) {
  if (!(e.t_minus > 0.0) || !(e.t_plus > 0.0) || !(e.f_minus > 0.0) ||
      !(e.f_plus > 0.0))
    throw ConfigError("diamond extents must be > 0");

  std::vector<CellOffset> cells;
  const int df_lo = static_cast<int>(std::ceil(-e.f_minus));
  const int df_hi = static_cast<int>(std::floor(e.f_plus));
  const int dt_lo = static_cast<int>(std::ceil(-e.t_minus));
  const int dt_hi = static_cast<int>(std::floor(e.t_plus));
  for (int df = df_lo; df <= df_hi; ++df) {
    const double ef = df < 0 ? e.f_minus : e.f_plus;
    const double rf = df == 0 ? 0.0 : std::abs(df) / ef;
    for (int dt = dt_lo; dt <= dt_hi; ++dt) {
      const double et = dt < 0 ? e.t_minus : e.t_plus;
      const double rt = dt == 0 ? 0.0 : std::abs(dt) / et;
      if (rt + rf <= 1.0) cells.push_back({dt, df});
    }
  }
  return cells;
}

namespace {

// RMS of the squared source map over the per-channel diamond. A cell is
// valid only if every diamond cell is on-grid and valid in the source mask.
void tract_one_map(const Eigen::MatrixXd& src, const MaskXb& src_valid,
                   const CorrelationProfile& profile, bool pattern_along_time,
                   const TractParams& params, Eigen::MatrixXd& dst,
                   MaskXb& dst_valid) {
  const Eigen::Index frames = src.rows();
  const Eigen::Index channels = src.cols();
  dst = Eigen::MatrixXd::Zero(frames, channels);
  dst_valid = MaskXb::Constant(frames, channels, false);

  for (Eigen::Index c = 0; c < channels; ++c) {
    const auto& cal = profile.channels[static_cast<std::size_t>(c)];
    if (!cal.has_freq()) continue;

    DiamondExtents ext;
    if (pattern_along_time) {
      ext.t_minus = params.c_p * cal.eps_t;
      ext.t_plus = params.c_p * cal.eps_t_up;
      ext.f_minus = params.c_t * *cal.eps_f;
      ext.f_plus = params.c_t * *cal.eps_f_up;
    } else {
      ext.t_minus = params.c_t * cal.eps_t;
      ext.t_plus = params.c_t * cal.eps_t_up;
      ext.f_minus = params.c_p * *cal.eps_f;
      ext.f_plus = params.c_p * *cal.eps_f_up;
    }
    const auto cells = diamond_cells(ext);

    bool channels_ok = true;
    for (const auto& cell : cells) {
      const Eigen::Index j = c + cell.df;
      if (j < 0 || j >= channels) {
        channels_ok = false;
        break;
      }
    }
    if (!channels_ok) continue;

    const double inv_n = 1.0 / static_cast<double>(cells.size());
    for (Eigen::Index t = 0; t < frames; ++t) {
      double acc = 0.0;
      bool ok = true;
      for (const auto& cell : cells) {
        const Eigen::Index row = t + cell.dt;
        if (row < 0 || row >= frames || !src_valid(row, c + cell.df)) {
          ok = false;
          break;
        }
        const double v = src(row, c + cell.df);
        acc += v * v;
      }
      if (ok) {
        dst(t, c) = std::sqrt(acc * inv_n);
        dst_valid(t, c) = true;
      }
    }
  }
}

}  // namespace

TextureMaps tract_features(CenterSurroundMaps csr,
                           const CorrelationProfile& profile,
                           const TractParams& params) {
  params.validate();
  if (static_cast<Eigen::Index>(profile.channels.size()) != csr.o_h.cols())
    throw CalibrationError("profile channel count does not match CSR maps");

  TextureMaps maps;
  tract_one_map(csr.o_h, csr.o_h_valid, profile, /*pattern_along_time=*/true,
                params, maps.t_vert, maps.t_vert_valid);
  tract_one_map(csr.o_v, csr.o_v_valid, profile, /*pattern_along_time=*/false,
                params, maps.t_horiz, maps.t_horiz_valid);
  maps.o_h = std::move(csr.o_h);
  maps.o_v = std::move(csr.o_v);
  maps.o_h_valid = std::move(csr.o_h_valid);
  maps.o_v_valid = std::move(csr.o_v_valid);
  return maps;
}

TextureMaps compute_texture(const Cochleagram& cochleagram,
                            const CorrelationProfile& profile,
                            const TractParams& params,
                            CsrInterpolation interpolation) {
  return tract_features(center_surround(cochleagram, profile, interpolation),
                        profile, params);
}

std::vector<double> valid_values(const Eigen::MatrixXd& map, const MaskXb& mask) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(map.size()));
  for (Eigen::Index c = 0; c < map.cols(); ++c)
    for (Eigen::Index t = 0; t < map.rows(); ++t)
      if (mask(t, c)) out.push_back(map(t, c));
  return out;
}

}  // namespace sonotex
