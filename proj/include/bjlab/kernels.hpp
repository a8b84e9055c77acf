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

#ifndef BJLAB_KERNELS_HPP
#define BJLAB_KERNELS_HPP

#include <optional>
#include <vector>

#include "bjlab/signal.hpp"

namespace bjlab {

// Polynomial pieces on consecutive knot intervals; coefficients are in the
// global variable t (ascending powers). Zero outside the support.
struct PiecewisePolynomial {
  std::vector<double> breakpoints;            // size pieces+1, increasing
  std::vector<std::vector<double>> pieces;    // per-interval coefficients
};

// Cardinal B-spline B_n on knots {-n/2, ..., n/2}, built by the exact
// antiderivative recursion B_{n+1}(t) = integral of B_n over [t-1/2, t+1/2].
// Valid for 1 <= n <= 12.
PiecewisePolynomial bspline(int n);

double eval_pp(const PiecewisePolynomial& p, double t);

// Exact integral over the full support.
double pp_integral(const PiecewisePolynomial& p);

// sin(pi t)/(pi t), with a series branch below |t| = 1e-6.
double sinc(double t);

struct KernelMatrix {
  RMat values;  // aligned with AmbiguityMatrix axes
};

// Born-Jordan kernel of order n (sinc^n on the ambiguity grid), or a custom
// sampled kernel. Order 0 is the constant-1 kernel (Wigner).
struct CohenKernelSpec {
  int order = 0;
  std::optional<RMat> custom;

  static CohenKernelSpec bj_order(int n);
  static CohenKernelSpec custom_kernel(RMat samples);
  bool is_custom() const { return custom.has_value(); }
};

// values[a,b] = sinc(zeta1(a) * zeta2(b))^order on the N x N ambiguity grid;
// custom kernels are passed through after a shape check.
KernelMatrix theta_grid(const CohenKernelSpec& spec, int n);

// Riemann-sum Fourier transform of B_n versus sinc^n over |xi| <= xi_max;
// returns the max absolute deviation. step is the quadrature step.
double bspline_ft_check(int n, double step = 1.0 / 64, double xi_max = 4.0);

}  // namespace bjlab

#endif  // BJLAB_KERNELS_HPP
