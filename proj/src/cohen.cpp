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

#include "bjlab/cohen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bjlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

CohenResult cohen_apply(const Signal& f, const Signal& g,
                        const CohenKernelSpec& spec, bool keep_ambiguity) {
  const TFDistribution w = cross_wigner(f, g);
  const int n = w.grid_size();
  AmbiguityMatrix amb;
  amb.origin_normalization = tf_cell_area(n);
  amb.values = symplectic_2d(w.values, amb.origin_normalization);
  const KernelMatrix theta = theta_grid(spec, n);

  CohenResult out;
  out.kernel_used = spec;
  out.distribution.kind =
      spec.is_custom() ? "custom" : "cohen(" + std::to_string(spec.order) + ")";
  out.distribution.freq_step = tf_cell_area(n);
  out.distribution.values =
      symplectic_2d(theta.values.cast<Complex>().cwiseProduct(amb.values),
                    ambiguity_cell_area(n));

  const bool auto_case =
      f.size() == g.size() && (f.samples - g.samples).norm() == 0.0;
  if (auto_case) {
    const double max_re = out.distribution.values.real().cwiseAbs().maxCoeff();
    const double max_im = out.distribution.values.imag().cwiseAbs().maxCoeff();
    out.distribution.imag_residual = max_re > 0.0 ? max_im / max_re : max_im;
    if (out.distribution.imag_residual > 1e-10) {
      throw std::runtime_error("auto-distribution reality check failed");
    }
    out.distribution.values = out.distribution.values.real().cast<Complex>();
  }
  if (keep_ambiguity) out.ambiguity_snapshot = amb;
  return out;
}

CohenResult bjd(const Signal& f, int n) {
  return cohen_apply(f, f, CohenKernelSpec::bj_order(n));
}

double smoothing_multiplier_check(int order, int n) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    const double z1 = 2.0 * signed_index(a, n);
    for (int b = 0; b < n; ++b) {
      const double z2 = static_cast<double>(signed_index(b, n)) / n;
      const double x = z1 * z2;
      double lhs = 1.0, rhs = 1.0;
      const double l = kPi * x * sinc(x);
      const double r = std::sin(kPi * x);
      for (int i = 0; i < order; ++i) {
        lhs *= l;
        rhs *= r;
      }
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

TFDistribution fourier_multiplier_apply(const TFDistribution& d,
                                        const KernelMatrix& multiplier) {
  const int n = d.grid_size();
  if (multiplier.values.rows() != n || multiplier.values.cols() != n) {
    throw std::invalid_argument("multiplier shape mismatch");
  }
  TFDistribution out = d;
  const CMat amb = symplectic_2d(d.values, tf_cell_area(n));
  out.values =
      symplectic_2d(multiplier.values.cast<Complex>().cwiseProduct(amb),
                    ambiguity_cell_area(n));
  return out;
}

}  // namespace bjlab
