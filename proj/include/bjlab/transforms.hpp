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

#ifndef BJLAB_TRANSFORMS_HPP
#define BJLAB_TRANSFORMS_HPP

#include <string>

#include "bjlab/signal.hpp"

namespace bjlab {

// Time-frequency distribution on the N x N grid: rows = time index n
// (step 1 sample), columns = frequency bin k (step 1/(2N) cycles/sample,
// axis covers [0, 1/2)).
struct TFDistribution {
  CMat values;
  double time_step = 1.0;
  double freq_step = 0.0;  // 1/(2N)
  std::string kind;        // "wigner", "cohen(n)", "spectrogram", "custom"
  // max |Im| / max |Re| recorded when the imaginary part is discarded.
  double imag_residual = 0.0;

  int grid_size() const { return static_cast<int>(values.rows()); }
};

// Centered signed index map: a for a < n/2, a - n otherwise.
int signed_index(int a, int n);

// Ambiguity-plane matrix. Row index a maps to delay zeta1 = 2*s(a) samples,
// column index b to doppler zeta2 = s(b)/N cycles/sample.
struct AmbiguityMatrix {
  CMat values;
  // Cell area used by the forward symplectic transform (the Wigner
  // normalization constant multiplying the (0,0) energy value).
  double origin_normalization = 1.0;

  int grid_size() const { return static_cast<int>(values.rows()); }
  double delay(int a) const { return 2.0 * signed_index(a, grid_size()); }
  double doppler(int b) const {
    return static_cast<double>(signed_index(b, grid_size())) / grid_size();
  }
};

struct STFTMatrix {
  CMat values;  // rows = hop positions, columns = nfft frequency bins
  int hop = 1;
  int nfft = 0;
};

// Grid cell areas for the two dual planes (their product times N^2 is 1,
// which makes the double symplectic transform an exact involution).
inline double tf_cell_area(int n) { return 1.0 / (2.0 * n); }
inline double ambiguity_cell_area(int n) { return 2.0 / n; }

// Unnormalized forward DFT (kernel exp(-2 pi i jk/N)); inverse carries 1/N.
CVec dft(const CVec& v);
CVec idft(const CVec& v);

// Row r, column k = sum_y f[y] conj(g[y - r*hop]) exp(-2 pi i y k / nfft),
// zero-extension outside the window support.
STFTMatrix stft(const Signal& f, const Signal& g, int hop, int nfft);

// |V_g f|^2 resampled onto the TFDistribution grid (N time rows, N bins over
// [0, 1/2)). The default window is f itself, circularly recentered so its
// energy centroid sits at lag 0; then row r reads as "window centered at r".
TFDistribution spectrogram(const Signal& f);
TFDistribution spectrogram(const Signal& f, const Signal& g);

// W[n,k] = 2 sum_{m=-N/2}^{N/2-1} f~[n+m] conj(g~[n-m]) exp(-2 pi i k m / N)
// with f~ the zero-extension of f. Frequency bin k corresponds to k/(2N).
TFDistribution cross_wigner(const Signal& f, const Signal& g);

// cross_wigner(f, f); imaginary residual checked and discarded.
TFDistribution wigner(const Signal& f);

// Symplectic Fourier transform of the cross-Wigner distribution.
AmbiguityMatrix ambiguity(const Signal& f, const Signal& g);

// out[a,b] = cell_area * sum_{n,k} F[n,k] exp(-2 pi i a k/N + 2 pi i b n/N).
// Applying it twice with dual cell areas (tf_cell_area, ambiguity_cell_area)
// reproduces the input.
CMat symplectic_2d(const CMat& f, double cell_area);

}  // namespace bjlab

#endif  // BJLAB_TRANSFORMS_HPP
