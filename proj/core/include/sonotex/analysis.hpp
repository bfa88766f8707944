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

#ifndef SONOTEX_ANALYSIS_HPP_
#define SONOTEX_ANALYSIS_HPP_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "sonotex/descriptors.hpp"

namespace sonotex {

// Fixed histogram grids: center-surround ratios from -30 to 30 dB in 2 dB
// steps, tract features from 0 to 15 in 0.25 dB steps.
enum class HistKind { csr, tract };

struct FeatureHistogram {
  HistKind kind = HistKind::csr;
  std::vector<double> bin_edges;
  std::vector<long long> counts;
  std::vector<double> densities;  // percent per dB; in-range area sums to
                                  // 100 * (in-range fraction)
  long long sample_count = 0;     // includes out-of-range samples
  long long below_count = 0;
  long long above_count = 0;

  double bin_width() const { return bin_edges[1] - bin_edges[0]; }
  // Fraction of all samples falling into bin i.
  double mass(std::size_t i) const {
    return static_cast<double>(counts[i]) / static_cast<double>(sample_count);
  }
};

std::vector<double> histogram_edges(HistKind kind);
FeatureHistogram histogram(std::span<const double> values, HistKind kind);

enum class BinFlag {
  defined,
  undefined_reference,  // reference density is zero; ratio meaningless
  negative_infinity,    // sound density is zero against a nonzero reference
};

// Per-bin base-10 log of sound density over reference density.
struct PrevalenceReport {
  std::vector<double> bin_edges;
  std::vector<double> log10_ratio;  // NaN where undefined, -inf where flagged
  std::vector<BinFlag> flags;
};

PrevalenceReport prevalence(const FeatureHistogram& sound,
                            const FeatureHistogram& reference);

struct PearsonResult {
  double r = 0.0;
  long long n_used = 0;
  long long n_excluded = 0;  // non-finite pairs dropped pairwise
};

// Product-moment correlation over the finite pairs. Requires at least three
// usable pairs and nonzero variance on both sides.
PearsonResult pearson(std::span<const double> xs, std::span<const double> ys);

enum class Category { harmonic, impact, continuous };

Category parse_category(const std::string& s);
const char* to_string(Category c);

// External perceptual coordinates (one row per sound).
struct PerceptualRow {
  std::string sound_id;
  Category category = Category::harmonic;
  std::array<double, 3> mds{};
};

struct PerceptualTable {
  std::vector<PerceptualRow> rows;
  void validate() const;  // unique sound ids
};

// One line of a descriptor table, as read back from CSV.
struct DescriptorRecord {
  std::string file;
  Weighting weighting = Weighting::energy;
  double pulsality = 0.0;
  double tonality = 0.0;
  double noisiness = 0.0;
};

struct CorrelationCell {
  bool defined = false;
  double r = 0.0;
  long long n_used = 0;
  long long n_excluded = 0;
};

// 6 x 3 grid of correlations: descriptors P/T/N in energy then area
// weighting against MDS dimensions 1..3.
struct CorrelationReport {
  static constexpr std::array<const char*, 6> kRowNames = {
      "P(E)", "T(E)", "N(E)", "P(1)", "T(1)", "N(1)"};
  std::array<std::array<CorrelationCell, 3>, 6> grid{};
  long long matched = 0;  // sound ids present on both sides
};

// Joins descriptor rows to perceptual rows on sound id (file stem) and
// fills the correlation grid. Rows with -inf descriptors are excluded
// pairwise and counted. Fewer than three matched sounds is an error.
CorrelationReport correlate_with_mds(
    const std::vector<DescriptorRecord>& descriptors,
    const PerceptualTable& perceptual);

// Two-sample Kolmogorov-Smirnov statistic over stride-decimated samples.
double ks_distance(std::span<const double> sample_a,
                   std::span<const double> sample_b, int stride = 1);

}  // namespace sonotex

#endif  // SONOTEX_ANALYSIS_HPP_
