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

#include "bjlab/transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace bjlab {

namespace {

void check_pair(const Signal& f, const Signal& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("signal lengths differ");
  }
  if (f.size() < 2 || f.size() % 2 != 0) {
    throw std::invalid_argument("signal length must be even and >= 2");
  }
}

CVec fft_fwd(Eigen::FFT<double>& fft, const CVec& v) {
  std::vector<Complex> in(v.data(), v.data() + v.size());
  std::vector<Complex> out(in.size());
  fft.fwd(out, in);
  return Eigen::Map<CVec>(out.data(), static_cast<long>(out.size()));
}

CVec fft_inv(Eigen::FFT<double>& fft, const CVec& v) {
  std::vector<Complex> in(v.data(), v.data() + v.size());
  std::vector<Complex> out(in.size());
  fft.inv(out, in);
  return Eigen::Map<CVec>(out.data(), static_cast<long>(out.size()));
}

}  // namespace

int signed_index(int a, int n) { return a < n / 2 ? a : a - n; }

CVec dft(const CVec& v) {
  if (v.size() < 1) throw std::invalid_argument("empty input to dft");
  if (v.size() == 1) return v;
  Eigen::FFT<double> fft;
  return fft_fwd(fft, v);
}

CVec idft(const CVec& v) {
  if (v.size() < 1) throw std::invalid_argument("empty input to idft");
  if (v.size() == 1) return v;
  Eigen::FFT<double> fft;
  return fft_inv(fft, v);
}

STFTMatrix stft(const Signal& f, const Signal& g, int hop, int nfft) {
  const int n = f.size();
  if (hop < 1) throw std::invalid_argument("hop must be positive");
  if (g.size() > nfft || nfft > n) {
    throw std::invalid_argument("need window length <= nfft <= signal length");
  }
  const int rows = (n + hop - 1) / hop;
  STFTMatrix out;
  out.hop = hop;
  out.nfft = nfft;
  out.values.resize(rows, nfft);
  Eigen::FFT<double> fft;
  CVec u(nfft);
  for (int r = 0; r < rows; ++r) {
    u.setZero();
    const int off = r * hop;
    for (int y = 0; y < n; ++y) {
      const int w = y - off;
      if (w < 0 || w >= g.size()) continue;
      u[y % nfft] += f.samples[y] * std::conj(g.samples[w]);
    }
    out.values.row(r) = fft_fwd(fft, u).transpose();
  }
  return out;
}

namespace {

// Shared spectrogram core: window w is indexed by signed lag d in
// [-N/2, N/2) stored at (d mod N); row r = window centered at sample r,
// column k = frequency k/(2N).
TFDistribution spectrogram_core(const Signal& f, const CVec& w) {
  const int n = f.size();
  TFDistribution out;
  out.kind = "spectrogram";
  out.freq_step = tf_cell_area(n);
  out.values.resize(n, n);
  Eigen::FFT<double> fft;
  CVec u(2 * n);
  for (int r = 0; r < n; ++r) {
    u.setZero();
    for (int y = 0; y < n; ++y) {
      const int d = y - r;
      if (d < -n / 2 || d >= n / 2) continue;
      u[y] = f.samples[y] * std::conj(w[(d + n) % n]);
    }
    const CVec row = fft_fwd(fft, u);
    for (int k = 0; k < n; ++k) out.values(r, k) = std::norm(row[k]);
  }
  return out;
}

}  // namespace

TFDistribution spectrogram(const Signal& f) {
  const int n = f.size();
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("signal length must be even and >= 2");
  }
  // Default window: f itself, recentered so its energy centroid lands at
  // lag 0 and demodulated by its dominant frequency bin. Without the
  // demodulation the window's own oscillation cancels the signal's in the
  // product f[y] conj(w[y-r]) and every row would peak at frequency zero;
  // with it a single atom peaks at its own (time, frequency) cell.
  double energy = 0.0, moment = 0.0;
  for (int j = 0; j < n; ++j) {
    const double e = std::norm(f.samples[j]);
    energy += e;
    moment += e * j;
  }
  const int c = energy > 0.0 ? static_cast<int>(std::lround(moment / energy)) : 0;
  int k0 = 0;
  if (energy > 0.0) {
    int dummy = 0;
    dft(f.samples).cwiseAbs().maxCoeff(&k0, &dummy);
  }
  const double two_pi = 6.283185307179586476925287;
  CVec w(n);
  for (int d = 0; d < n; ++d) {
    const double ph = -two_pi * k0 * (c + d) / n;
    w[d] = f.samples[(c + d) % n] * Complex(std::cos(ph), std::sin(ph));
  }
  return spectrogram_core(f, w);
}

TFDistribution spectrogram(const Signal& f, const Signal& g) {
  check_pair(f, g);
  return spectrogram_core(f, g.samples);
}

TFDistribution cross_wigner(const Signal& f, const Signal& g) {
  check_pair(f, g);
  const int n = f.size();
  TFDistribution out;
  out.kind = "wigner";
  out.freq_step = tf_cell_area(n);
  out.values.resize(n, n);
  Eigen::FFT<double> fft;
  CVec u(n);
  for (int r = 0; r < n; ++r) {
    u.setZero();
    for (int m = -n / 2; m < n / 2; ++m) {
      const int i1 = r + m;
      const int i2 = r - m;
      if (i1 < 0 || i1 >= n || i2 < 0 || i2 >= n) continue;
      u[(m + n) % n] = f.samples[i1] * std::conj(g.samples[i2]);
    }
    out.values.row(r) = 2.0 * fft_fwd(fft, u).transpose();
  }
  return out;
}

TFDistribution wigner(const Signal& f) {
  TFDistribution out = cross_wigner(f, f);
  const double max_re = out.values.real().cwiseAbs().maxCoeff();
  const double max_im = out.values.imag().cwiseAbs().maxCoeff();
  out.imag_residual = max_re > 0.0 ? max_im / max_re : max_im;
  if (out.imag_residual > 1e-10) {
    throw std::runtime_error("Wigner reality check failed");
  }
  out.values = out.values.real().cast<Complex>();
  return out;
}

AmbiguityMatrix ambiguity(const Signal& f, const Signal& g) {
  const TFDistribution w = cross_wigner(f, g);
  AmbiguityMatrix out;
  out.origin_normalization = tf_cell_area(w.grid_size());
  out.values = symplectic_2d(w.values, out.origin_normalization);
  return out;
}

CMat symplectic_2d(const CMat& f, double cell_area) {
  if (f.rows() != f.cols()) {
    throw std::invalid_argument("symplectic transform needs a square matrix");
  }
  const int n = static_cast<int>(f.rows());
  Eigen::FFT<double> fft;
  // t[b,k] = sum_n f[n,k] exp(+2 pi i b n / N)  (inverse DFT times N)
  CMat t(n, n);
  for (int k = 0; k < n; ++k) {
    t.col(k) = fft_inv(fft, f.col(k)) * static_cast<double>(n);
  }
  // a[b,a'] = sum_k t[b,k] exp(-2 pi i a' k / N)
  CMat a(n, n);
  for (int b = 0; b < n; ++b) {
    a.row(b) = fft_fwd(fft, t.row(b).transpose()).transpose();
  }
  return cell_area * a.transpose();
}

}  // namespace bjlab
