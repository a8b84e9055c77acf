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

#include "bjlab/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bjlab/transforms.hpp"

namespace bjlab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_length(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("signal length must be even and >= 2");
  }
}

void check_atom(const AtomSpec& spec) {
  if (!std::isfinite(spec.time_center) || !std::isfinite(spec.freq_center) ||
      !std::isfinite(spec.width) || !std::isfinite(spec.amplitude.real()) ||
      !std::isfinite(spec.amplitude.imag())) {
    throw std::invalid_argument("atom parameters must be finite");
  }
  if (spec.width <= 0.0) {
    throw std::invalid_argument("atom width must be positive");
  }
  if (spec.freq_center < 0.0 || spec.freq_center >= 0.5) {
    throw std::invalid_argument("atom frequency must lie in [0, 1/2)");
  }
}

}  // namespace

Signal gaussian(int n, const AtomSpec& spec) {
  check_length(n);
  check_atom(spec);
  Signal out;
  out.samples.resize(n);
  for (int j = 0; j < n; ++j) {
    const double t = (j - spec.time_center) / spec.width;
    const double env = std::exp(-kPi * t * t);
    const double ph = 2.0 * kPi * j * spec.freq_center;
    out.samples[j] = spec.amplitude * Complex(std::cos(ph), std::sin(ph)) * env;
  }
  const double tail0 = std::exp(-kPi * std::pow(spec.time_center / spec.width, 2));
  const double tail1 =
      std::exp(-kPi * std::pow((n - 1 - spec.time_center) / spec.width, 2));
  out.edge_warning = std::max(tail0, tail1) > 1e-12;
  return out;
}

Signal translate(const Signal& f, int x) {
  const int n = f.size();
  if (std::abs(x) >= n) {
    throw std::out_of_range("translation shift out of range");
  }
  Signal out = f;
  out.samples.setZero();
  for (int j = 0; j < n; ++j) {
    const int src = j - x;
    if (src >= 0 && src < n) out.samples[j] = f.samples[src];
  }
  return out;
}

Signal modulate(const Signal& f, double omega) {
  if (!std::isfinite(omega)) {
    throw std::invalid_argument("modulation frequency must be finite");
  }
  Signal out = f;
  for (int j = 0; j < f.size(); ++j) {
    const double ph = 2.0 * kPi * j * omega;
    out.samples[j] = f.samples[j] * Complex(std::cos(ph), std::sin(ph));
  }
  return out;
}

Signal tf_shift(const Signal& f, int x, double omega) {
  return modulate(translate(f, x), omega);
}

Signal synthesize(const Constellation& c) {
  if (c.atoms.empty()) {
    throw std::invalid_argument("constellation has no atoms");
  }
  check_length(c.length);
  for (const AtomSpec& a : c.atoms) {
    if (a.time_center < 0.0 || a.time_center >= c.length) {
      throw std::invalid_argument("atom time center outside the grid");
    }
  }
  Signal out;
  out.samples = CVec::Zero(c.length);
  for (const AtomSpec& a : c.atoms) {
    Signal g = gaussian(c.length, a);
    out.samples += g.samples;
    out.edge_warning = out.edge_warning || g.edge_warning;
  }
  return out;
}

Constellation rotate_constellation(const Constellation& c, double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("rotation angle must be finite");
  }
  if (c.atoms.empty()) {
    throw std::invalid_argument("constellation has no atoms");
  }
  // Normalized coordinates: u = time/N, v = 2*freq, both spanning [0,1).
  double cu = 0.0, cv = 0.0;
  for (const AtomSpec& a : c.atoms) {
    cu += a.time_center / c.length;
    cv += 2.0 * a.freq_center;
  }
  cu /= c.atoms.size();
  cv /= c.atoms.size();
  const double cs = std::cos(angle), sn = std::sin(angle);
  Constellation out = c;
  for (size_t i = 0; i < c.atoms.size(); ++i) {
    const double u = c.atoms[i].time_center / c.length - cu;
    const double v = 2.0 * c.atoms[i].freq_center - cv;
    const double ur = cs * u - sn * v + cu;
    const double vr = sn * u + cs * v + cv;
    const double t = ur * c.length;
    const double w = vr / 2.0;
    if (t < 0.0 || t >= c.length || w < 0.0 || w >= 0.5) {
      throw std::domain_error("rotated atom leaves the valid band");
    }
    out.atoms[i].time_center = t;
    out.atoms[i].freq_center = w;
  }
  return out;
}

Signal analytic_projection(const Signal& f) {
  const int n = f.size();
  check_length(n);
  CVec spec = dft(f.samples);
  spec[0] *= 0.5;
  spec[n / 2] *= 0.5;
  for (int k = n / 2 + 1; k < n; ++k) spec[k] = 0.0;
  Signal out = f;
  out.samples = idft(spec);
  return out;
}

}  // namespace bjlab
