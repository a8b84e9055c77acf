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

#ifndef BJLAB_SIGNAL_HPP
#define BJLAB_SIGNAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace bjlab {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

// Discrete signal on an even-length integer grid. Time is measured in
// samples, frequency in cycles/sample. sample_period is carried as metadata
// only (WAV ingestion sets it from the header).
struct Signal {
  CVec samples;
  double sample_period = 1.0;
  std::string label;
  // Set when a Gaussian tail at the grid edge exceeds 1e-12 of the peak.
  bool edge_warning = false;

  int size() const { return static_cast<int>(samples.size()); }
};

// Gaussian atom parameters: pi(z)phi with z = (time_center, freq_center),
// width is the Gaussian sigma in samples (width 1 reproduces exp(-pi t^2)
// sampled at unit period).
struct AtomSpec {
  double time_center = 0.0;
  double freq_center = 0.0;  // cycles/sample, in [0, 1/2)
  Complex amplitude{1.0, 0.0};
  double width = 1.0;
};

struct Constellation {
  std::vector<AtomSpec> atoms;
  int length = 0;  // signal length N
};

Signal gaussian(int n, const AtomSpec& spec);

// Zero-extended (non-periodic) shift: out[j] = f[j - x] where defined, else 0.
Signal translate(const Signal& f, int x);

// out[j] = exp(2 pi i j omega) f[j].
Signal modulate(const Signal& f, double omega);

// M_omega T_x f (modulate after translate).
Signal tf_shift(const Signal& f, int x, double omega);

Signal synthesize(const Constellation& c);

// Rotates atom centers about the constellation centroid in normalized
// coordinates (time/N, 2*freq), so both spans are [0,1). Widths unchanged.
// Throws if a rotated atom leaves the valid time grid or frequency band.
Constellation rotate_constellation(const Constellation& c, double angle);

// Zeroes negative-frequency DFT bins (N/2+1 .. N-1), halves bins 0 and N/2.
Signal analytic_projection(const Signal& f);

}  // namespace bjlab

#endif  // BJLAB_SIGNAL_HPP
