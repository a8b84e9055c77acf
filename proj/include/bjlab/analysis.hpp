// Copyright 2026 The bjlab Authors
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

#ifndef BJLAB_ANALYSIS_HPP
#define BJLAB_ANALYSIS_HPP

#include <vector>

#include "bjlab/cohen.hpp"

namespace bjlab {

// Rectangular region in (time samples, cycles/sample) coordinates.
struct RegionSpec {
  double time_center = 0.0;
  double freq_center = 0.0;
  double time_half_width = 0.0;
  double freq_half_width = 0.0;
};

// sum |D|^2 * cellArea over grid cells inside r (clipped to the grid).
double region_energy(const TFDistribution& d, const RegionSpec& r);

enum class PairClass { on_axis_time, on_axis_freq, diagonal };

struct PairRecord {
  int first_atom = 0;
  int second_atom = 0;
  double mid_time = 0.0;
  double mid_freq = 0.0;
  PairClass classification = PairClass::diagonal;
  std::vector<double> energies;  // indexed like DampingReport::orders
  std::vector<double> ratios;    // energies / baseline order-0 energy
};

// Clustering box for ghost counting: a weaker maximum within both radii of a
// stronger one is absorbed into its cluster.
struct ClusterRadii {
  double time_samples = 0.0;
  double freq_cps = 0.0;  // cycles/sample
};

// Defaults tuned so the interference fringes of Gaussian-atom cross-terms
// are absorbed while distinct spots of the standard presets stay separate.
ClusterRadii default_cluster_radii(int n);

struct DampingReport {
  std::vector<int> orders;
  std::vector<PairRecord> pairs;                   // lexicographic atom order
  std::vector<std::vector<double>> auto_energies;  // [atom][order]
  std::vector<int> ghost_counts;                   // per order
  double threshold_fraction = 0.1;
  ClusterRadii cluster_radii;
  bool region_overlap = false;  // auto/cross region overlap detected
};

// Scores each unordered atom pair of c on bjd(f, n) for every requested
// order: region centered at the TF midpoint of the pair, half-widths
// 3*(width, 1/(2 pi width)). Ratios are relative to the order-0 energy.
DampingReport cross_term_report(const Signal& f, const Constellation& c,
                                const std::vector<int>& orders);
DampingReport cross_term_report(const Signal& f, const Constellation& c,
                                const std::vector<int>& orders,
                                double threshold_fraction,
                                const ClusterRadii& radii);

// Number of local-maximum clusters of |D| above threshold_fraction * max|D|.
int ghost_count(const TFDistribution& d, double threshold_fraction);
int ghost_count(const TFDistribution& d, double threshold_fraction,
                const ClusterRadii& radii);

// Normalization constant kappa relating the discrete Wigner inner product to
// |<f,g>|^2, calibrated once on a band-centered unit-amplitude Gaussian and
// frozen.
double moyal_kappa();

// |kappa * sum Wf conj(Wg) cellArea - |<f,g>|^2| / |<f,g>|^2; the absolute
// defect is returned instead when the pair is near-orthogonal.
double moyal_check(const Signal& f, const Signal& g);
double moyal_check(const Signal& f, const Signal& g, double kappa);

struct DilationFit {
  double slope = 0.0;        // d log ||W phi_lambda||_2 / d log lambda
  double unit_defect = 0.0;  // | ||W phi||_2 - ||phi||_2^2 | at lambda = 1
};

// Least-squares slope of log ||W(phi(lambda .))||_2 against log lambda for a
// base Gaussian of width 16 at band center; requires every lambda to keep
// the dilated atom resolved on the grid.
DilationFit dilation_scaling(const std::vector<double>& lambdas, int n);

}  // namespace bjlab

#endif  // BJLAB_ANALYSIS_HPP
