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

#include "sonotex/cochleagram.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "sonotex/errors.hpp"

namespace sonotex {

namespace {

// FFTW buffers and plans for one overlap-add geometry. Plans are created
// with FFTW_ESTIMATE: estimated plans depend only on the problem size, so
// results are reproducible run to run.
class OverlapAddEngine {
 public:
  OverlapAddEngine(const FilterbankConfig& config)
      : decim_(config.decimation()), filter_len_(config.filter_length()) {
    int blocks_per_fft = 2;
    {
      // smallest power of two >= ceil(2 * M / D), at least 2
      const int target = static_cast<int>(
          (2LL * filter_len_ + decim_ - 1) / decim_);
      while (blocks_per_fft < target) blocks_per_fft *= 2;
    }
    fft_size_ = decim_ * blocks_per_fft;
    dec_size_ = blocks_per_fft;
    hop_ = ((fft_size_ - filter_len_ + 1) / decim_) * decim_;
    hop_dec_ = hop_ / decim_;

    big_ = alloc(fft_size_);
    spec_ = alloc(fft_size_);
    small_in_ = alloc(dec_size_);
    small_out_ = alloc(dec_size_);
    fwd_ = fftw_plan_dft_1d(fft_size_, big_, spec_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(dec_size_, small_in_, small_out_, FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }

  ~OverlapAddEngine() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(big_);
    fftw_free(spec_);
    fftw_free(small_in_);
    fftw_free(small_out_);
  }

  OverlapAddEngine(const OverlapAddEngine&) = delete;
  OverlapAddEngine& operator=(const OverlapAddEngine&) = delete;

  int fft_size() const { return fft_size_; }
  int hop() const { return hop_; }
  int hop_dec() const { return hop_dec_; }
  int dec_size() const { return dec_size_; }

  // Spectrum of the zero-padded filter, scaled by 1/fft_size so the inverse
  // transform needs no further normalization.
  std::vector<std::complex<double>> filter_spectrum(
      const GammachirpFilter& filter) {
    for (int i = 0; i < fft_size_; ++i) big_[i][0] = big_[i][1] = 0.0;
    for (std::size_t k = 0; k < filter.coefficients.size(); ++k) {
      big_[k][0] = filter.coefficients[k].real();
      big_[k][1] = filter.coefficients[k].imag();
    }
    fftw_execute(fwd_);
    std::vector<std::complex<double>> h(static_cast<std::size_t>(fft_size_));
    const double scale = 1.0 / fft_size_;
    for (int i = 0; i < fft_size_; ++i)
      h[static_cast<std::size_t>(i)] =
          std::complex<double>(spec_[i][0] * scale, spec_[i][1] * scale);
    return h;
  }

  // Forward transform of one zero-padded signal block.
  void load_block(const double* x, int count) {
    for (int i = 0; i < count; ++i) {
      big_[i][0] = x[i];
      big_[i][1] = 0.0;
    }
    for (int i = count; i < fft_size_; ++i) big_[i][0] = big_[i][1] = 0.0;
    fftw_execute(fwd_);
  }

  // Convolution outputs of the current block at block positions
  // 0, D, 2D, ... (dec_size of them). Folding the spectrum product modulo
  // dec_size before the short inverse transform evaluates exactly those
  // samples of the full-rate overlap-add result.
  void convolve_decimated(const std::complex<double>* h,
                          std::complex<double>* z_out) {
    for (int k = 0; k < dec_size_; ++k) small_in_[k][0] = small_in_[k][1] = 0.0;
    int idx = 0;
    for (int a = 0; a < decim_; ++a) {
      for (int k = 0; k < dec_size_; ++k, ++idx) {
        const double xr = spec_[idx][0];
        const double xi = spec_[idx][1];
        const double hr = h[idx].real();
        const double hi = h[idx].imag();
        small_in_[k][0] += xr * hr - xi * hi;
        small_in_[k][1] += xr * hi + xi * hr;
      }
    }
    fftw_execute(bwd_);
    for (int k = 0; k < dec_size_; ++k)
      z_out[k] = std::complex<double>(small_out_[k][0], small_out_[k][1]);
  }

 private:
  static fftw_complex* alloc(int n) {
    return static_cast<fftw_complex*>(
        fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(n)));
  }

  int decim_;
  int filter_len_;
  int fft_size_ = 0;
  int dec_size_ = 0;  // fft_size / decimation
  int hop_ = 0;       // block advance in input samples (multiple of D)
  int hop_dec_ = 0;   // block advance in output frames
  fftw_complex* big_ = nullptr;
  fftw_complex* spec_ = nullptr;
  fftw_complex* small_in_ = nullptr;
  fftw_complex* small_out_ = nullptr;
  fftw_plan fwd_ = nullptr;
  fftw_plan bwd_ = nullptr;
};

}  // namespace

Eigen::MatrixXd compute_energy(const Signal& signal,
                               const FilterbankConfig& config) {
  signal.validate();
  config.validate();
  if (signal.sample_rate != config.sample_rate)
    throw ConfigError("signal sample rate " +
                      std::to_string(signal.sample_rate) +
                      " does not match configured rate " +
                      std::to_string(config.sample_rate) +
                      " (resampling is not supported)");
  const auto n = static_cast<long long>(signal.samples.size());
  if (n < config.filter_length())
    throw DataError("signal shorter than one filter length");

  const auto bank = build_filterbank(config);
  OverlapAddEngine engine(config);

  std::vector<std::vector<std::complex<double>>> spectra;
  spectra.reserve(bank.size());
  for (const auto& f : bank) spectra.push_back(engine.filter_spectrum(f));

  const int D = config.decimation();
  const long long total_frames = (n - 1) / D + 1;
  const int hop = engine.hop();
  const int hop_dec = engine.hop_dec();
  const int dec_size = engine.dec_size();
  const int carry_len = dec_size - hop_dec;
  const long long n_blocks = (total_frames + hop_dec - 1) / hop_dec;

  Eigen::MatrixXd energy(total_frames, config.n_seg);
  std::vector<std::vector<std::complex<double>>> carry(
      bank.size(),
      std::vector<std::complex<double>>(static_cast<std::size_t>(carry_len)));
  std::vector<std::complex<double>> z(static_cast<std::size_t>(dec_size));

  for (long long b = 0; b < n_blocks; ++b) {
    const long long start = b * hop;
    const int count =
        static_cast<int>(std::min<long long>(hop, n - start));
    engine.load_block(signal.samples.data() + start, count);
    const long long frame0 = b * hop_dec;
    for (std::size_t c = 0; c < bank.size(); ++c) {
      engine.convolve_decimated(spectra[c].data(), z.data());
      auto& tail = carry[c];
      for (int k = 0; k < carry_len; ++k) z[static_cast<std::size_t>(k)] += tail[static_cast<std::size_t>(k)];
      const int emit = static_cast<int>(
          std::min<long long>(hop_dec, total_frames - frame0));
      for (int k = 0; k < emit; ++k)
        energy(frame0 + k, static_cast<Eigen::Index>(c)) =
            std::norm(z[static_cast<std::size_t>(k)]);
      for (int k = 0; k < carry_len; ++k)
        tail[static_cast<std::size_t>(k)] = z[static_cast<std::size_t>(hop_dec + k)];
    }
  }
  return energy;
}

Cochleagram compute_cochleagram(const Signal& signal,
                                const FilterbankConfig& config,
                                const std::string& source_id) {
  Eigen::MatrixXd energy = compute_energy(signal, config);
  for (Eigen::Index c = 0; c < energy.cols(); ++c) {
    for (Eigen::Index t = 0; t < energy.rows(); ++t) {
      const double e = energy(t, c);
      if (e <= 0.0)
        throw DataError(
            "zero energy at frame " + std::to_string(t) + ", channel " +
            std::to_string(c) +
            "; add a noise floor to the signal before analysis");
      energy(t, c) = energy_to_db(e);
    }
  }
  Cochleagram out;
  out.log_energy = std::move(energy);
  out.frame_rate = config.frame_rate();
  out.channel_frequencies = config.channel_frequencies();
  out.source_id = source_id;
  return out;
}

double frame_time(const Cochleagram& c, Eigen::Index frame_index) {
  if (frame_index < 0 || frame_index >= c.frames())
    throw DataError("frame index out of range");
  return static_cast<double>(frame_index) / c.frame_rate;
}

}  // namespace sonotex
