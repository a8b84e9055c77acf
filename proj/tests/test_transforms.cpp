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

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "bjlab/signal.hpp"
#include "bjlab/transforms.hpp"

using namespace bjlab;

namespace {

constexpr double kPi = std::numbers::pi;

Signal random_signal(unsigned seed, int n) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Signal f;
  f.samples.resize(n);
  for (int i = 0; i < n; ++i) f.samples[i] = Complex(dist(rng), dist(rng));
  return f;
}

Signal impulse(int n, int at) {
  Signal f;
  f.samples = CVec::Zero(n);
  f.samples[at] = 1.0;
  return f;
}

Complex cis(double ph) { return {std::cos(ph), std::sin(ph)}; }

// O(N^3) reference for the lag-form cross-Wigner.
CMat wigner_direct(const CVec& f, const CVec& g) {
  const int n = static_cast<int>(f.size());
  CMat w(n, n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      Complex acc = 0.0;
      for (int m = -n / 2; m < n / 2; ++m) {
        const int i1 = r + m, i2 = r - m;
        if (i1 < 0 || i1 >= n || i2 < 0 || i2 >= n) continue;
        acc += f[i1] * std::conj(g[i2]) * cis(-2.0 * kPi * k * m / n);
      }
      w(r, k) = 2.0 * acc;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("dft basics") {
  const int n = 16;
  CHECK((dft(impulse(n, 0).samples) - CVec::Ones(n)).cwiseAbs().maxCoeff() < 1e-12);

  const CVec all = dft(CVec::Ones(n));
  CHECK(std::abs(all[0] - Complex(n, 0)) < 1e-12);
  for (int k = 1; k < n; ++k) CHECK(std::abs(all[k]) < 1e-12);

  const Signal v = random_signal(5, n);
  const CVec d = dft(v.samples);
  CHECK(d.squaredNorm() == doctest::Approx(n * v.samples.squaredNorm()).epsilon(1e-12));
  CHECK((idft(d) - v.samples).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dft matches direct sum at N=12") {
  const int n = 12;
  const Signal v = random_signal(6, n);
  const CVec d = dft(v.samples);
  for (int k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (int j = 0; j < n; ++j) acc += v.samples[j] * cis(-2.0 * kPi * j * k / n);
    CHECK(std::abs(acc - d[k]) < 1e-10);
  }
}

TEST_CASE("stft impulse and phase invariance") {
  const int n = 16;
  const Signal d = impulse(n, 0);
  const STFTMatrix s = stft(d, d, 1, n);
  CHECK(s.values.rows() == n);
  for (int k = 0; k < n; ++k) CHECK(std::abs(s.values(0, k) - Complex(1, 0)) < 1e-12);
  CHECK(s.values.bottomRows(n - 1).cwiseAbs().maxCoeff() < 1e-12);

  const Signal f = random_signal(7, n);
  const Signal g = random_signal(8, n);
  Signal fp = f;
  fp.samples *= cis(0.7);
  const STFTMatrix a = stft(f, g, 1, n);
  const STFTMatrix b = stft(fp, g, 1, n);
  CHECK((a.values.cwiseAbs() - b.values.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS(stft(f, g, 0, n));
  CHECK_THROWS(stft(f, g, 1, n / 2));  // window longer than nfft
}

TEST_CASE("stft fundamental identity") {
  // |V_g f(x, omega)| = |V_ghat fhat(omega, -x)| / N in the cyclic setting.
  // The zero-extension stft coincides with the cyclic transform when the
  // window occupies only the first quarter of the grid.
  const int n = 32;
  const Signal f = random_signal(9, n);
  Signal g;
  g.samples = CVec::Zero(n);
  {
    const Signal q = random_signal(10, n / 4);
    g.samples.head(n / 4) = q.samples;
  }
  const STFTMatrix v = stft(f, g, 1, n);

  // cyclic reference by direct summation
  CMat cyc(n, n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      Complex acc = 0.0;
      for (int y = 0; y < n; ++y) {
        acc += f.samples[y] * std::conj(g.samples[((y - r) % n + n) % n]) *
               cis(-2.0 * kPi * y * k / n);
      }
      cyc(r, k) = acc;
    }
  }
  // zero-extension matches the cyclic sum until the sliding window starts
  // to wrap, i.e. for rows r <= 3N/4 with quarter-length support
  const int rows = 3 * n / 4 + 1;
  CHECK((v.values.topRows(rows) - cyc.topRows(rows)).cwiseAbs().maxCoeff() <
        1e-10);

  // frequency-side transform, computed independently from the DFTs
  const CVec fhat = dft(f.samples);
  const CVec ghat = dft(g.samples);
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      Complex acc = 0.0;
      for (int b = 0; b < n; ++b) {
        acc += fhat[b] * std::conj(ghat[((b - a) % n + n) % n]) *
               cis(2.0 * kPi * b * x / n);
      }
      worst = std::max(worst,
                       std::abs(std::abs(acc) - n * std::abs(cyc(x, a))));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("spectrogram") {
  const int n = 64;
  AtomSpec a;
  a.time_center = 24;
  a.freq_center = 0.3125;  // exact bin: 20/64
  a.width = 6;
  const Signal f = gaussian(n, a);
  const TFDistribution s = spectrogram(f);
  CHECK(s.values.real().minCoeff() >= 0.0);
  CHECK(s.values.imag().cwiseAbs().maxCoeff() == 0.0);

  int bi = 0, bk = 0;
  s.values.real().maxCoeff(&bi, &bk);
  CHECK(std::abs(bi - 24) <= 1);
  CHECK(std::abs(bk - static_cast<int>(std::round(0.3125 * 2 * n))) <= 1);

  Signal zero;
  zero.samples = CVec::Zero(n);
  CHECK(spectrogram(zero).values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("cross_wigner impulse") {
  const int n = 16;
  const Signal d = impulse(n, 5);
  const TFDistribution w = cross_wigner(d, d);
  for (int k = 0; k < n; ++k) CHECK(std::abs(w.values(5, k) - Complex(2, 0)) < 1e-12);
  double rest = 0.0;
  for (int r = 0; r < n; ++r) {
    if (r == 5) continue;
    rest = std::max(rest, w.values.row(r).cwiseAbs().maxCoeff());
  }
  CHECK(rest < 1e-12);
}

TEST_CASE("cross_wigner equals direct sum at N=16") {
  const Signal f = random_signal(12, 16);
  const Signal g = random_signal(13, 16);
  const TFDistribution w = cross_wigner(f, g);
  CHECK((w.values - wigner_direct(f.samples, g.samples)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK_THROWS(cross_wigner(f, random_signal(14, 8)));
}

TEST_CASE("cross_wigner conjugate symmetry and bilinearity") {
  const int n = 32;
  const Signal f = random_signal(15, n);
  const Signal g = random_signal(16, n);
  const TFDistribution wfg = cross_wigner(f, g);
  const TFDistribution wgf = cross_wigner(g, f);
  CHECK((wgf.values - wfg.values.conjugate()).cwiseAbs().maxCoeff() < 1e-12);

  Signal sum;
  sum.samples = f.samples + g.samples;
  const CMat lhs = cross_wigner(sum, sum).values;
  const CMat rhs = cross_wigner(f, f).values + cross_wigner(g, g).values +
                   2.0 * wfg.values.real().cast<Complex>();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("wigner reality and covariance") {
  const int n = 256;
  AtomSpec a;
  a.time_center = 100;
  a.freq_center = 0.15;
  a.width = 10;
  const Signal f = gaussian(n, a);
  const TFDistribution w = wigner(f);
  CHECK(w.imag_residual <= 1e-10);

  const int x0 = 8;
  const int kshift = 16;
  const double om = static_cast<double>(kshift) / (2 * n);
  const TFDistribution ws = wigner(tf_shift(f, x0, om));
  double worst = 0.0;
  for (int r = 20; r < n - 20; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex expect = w.values(r - x0, (k - kshift + n) % n);
      worst = std::max(worst, std::abs(ws.values(r, k) - expect));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("wigner closed form for a centered Gaussian") {
  const int n = 256;
  const double sigma = 8.0;
  AtomSpec a;
  a.time_center = n / 2;
  a.width = sigma;
  const Signal f = gaussian(n, a);
  const TFDistribution w = wigner(f);
  // W phi = sqrt(2) sigma exp(-2 pi x^2/sigma^2) exp(-2 pi sigma^2 omega^2);
  // the discrete frequency axis has period 1/2, so the closed form is
  // summed over the alias copies at omega - j/2.
  double worst = 0.0, peak = 0.0;
  for (int r = 0; r < n; ++r) {
    const double x = r - n / 2;
    for (int k = 0; k < n; ++k) {
      double model = 0.0;
      for (int j = -1; j <= 1; ++j) {
        const double om = static_cast<double>(k) / (2 * n) - 0.5 * j;
        model += std::sqrt(2.0) * sigma *
                 std::exp(-2.0 * kPi * x * x / (sigma * sigma)) *
                 std::exp(-2.0 * kPi * sigma * sigma * om * om);
      }
      peak = std::max(peak, std::abs(model));
      worst = std::max(worst, std::abs(w.values(r, k).real() - model));
    }
  }
  CHECK(worst / peak < 1e-3);
}

TEST_CASE("ambiguity") {
  const int n = 64;
  AtomSpec a;
  a.time_center = 32;
  a.freq_center = 0.25;
  a.width = 6;
  const Signal f = gaussian(n, a);
  const AmbiguityMatrix amb = ambiguity(f, f);
  // (0,0) value: sum of W over the grid times the cell area = signal energy
  CHECK(std::abs(amb.values(0, 0).real() - f.samples.squaredNorm()) < 1e-10);
  CHECK(amb.origin_normalization == tf_cell_area(n));
  CHECK(amb.delay(1) == 2.0);
  CHECK(amb.delay(n - 1) == -2.0);
  CHECK(amb.doppler(1) == doctest::Approx(1.0 / n));

  const Signal d = impulse(n, 7);
  const AmbiguityMatrix ai = ambiguity(d, d);
  for (int b = 0; b < n; ++b) {
    CHECK(std::abs(ai.values(0, b)) == doctest::Approx(1.0).epsilon(1e-10));
  }

  const Signal shifted = tf_shift(f, 4, 0.125);
  const AmbiguityMatrix as = ambiguity(shifted, shifted);
  CHECK((as.values.cwiseAbs() - amb.values.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("symplectic_2d") {
  const int n = 8;
  std::mt19937 rng(77);
  std::normal_distribution<double> dist(0.0, 1.0);
  CMat m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  }

  const CMat twice =
      symplectic_2d(symplectic_2d(m, tf_cell_area(n)), ambiguity_cell_area(n));
  CHECK((twice - m).cwiseAbs().maxCoeff() / m.cwiseAbs().maxCoeff() < 1e-12);

  // constant matrix concentrates at the origin of the centered grid
  const CMat flat = symplectic_2d(CMat::Ones(n, n), 1.0);
  CHECK(std::abs(flat(0, 0) - Complex(n * n, 0)) < 1e-10);
  CHECK(flat.cwiseAbs().sum() == doctest::Approx(n * n).epsilon(1e-10));

  // independent oracle: plain 2D DFT followed by the J index remap
  CMat g(n, n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      Complex acc = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          acc += m(i, j) * cis(-2.0 * kPi * (p * i + q * j) / n);
        }
      }
      g(p, q) = acc;
    }
  }
  const CMat s = symplectic_2d(m, 1.0);
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      worst = std::max(worst, std::abs(s(a, b) - g((n - b) % n, a)));
    }
  }
  CHECK(worst < 1e-12);

  CHECK_THROWS(symplectic_2d(CMat::Ones(4, 6), 1.0));
}
