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

#include "bjlab/kernels.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "bjlab/transforms.hpp"

namespace bjlab {

namespace {

constexpr double kPi = std::numbers::pi;

using Poly = std::vector<double>;

double poly_eval(const Poly& p, double t) {
  double v = 0.0;
  for (size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

Poly poly_antideriv(const Poly& p) {
  Poly out(p.size() + 1, 0.0);
  for (size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i] / (i + 1);
  return out;
}

// q(t) = p(t + d), expanded via the binomial theorem.
Poly poly_shift(const Poly& p, double d) {
  Poly out(p.size(), 0.0);
  for (size_t i = 0; i < p.size(); ++i) {
    double binom = 1.0;
    double dp = 1.0;
    for (size_t j = 0; j <= i; ++j) {
      out[i - j] += p[i] * binom * dp;
      binom = binom * (i - j) / (j + 1);
      dp *= d;
    }
  }
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

// Cumulative antiderivative of p over its support: pieces F_i with
// F(breakpoints[0]) = 0; returns also the total mass.
struct Cumulative {
  std::vector<Poly> pieces;  // same breakpoints as the source
  double total = 0.0;
};

Cumulative cumulative(const PiecewisePolynomial& p) {
  Cumulative out;
  double acc = 0.0;
  for (size_t i = 0; i < p.pieces.size(); ++i) {
    Poly prim = poly_antideriv(p.pieces[i]);
    const double at_left = poly_eval(prim, p.breakpoints[i]);
    prim[0] += acc - at_left;
    out.pieces.push_back(prim);
    acc = poly_eval(prim, p.breakpoints[i + 1]);
  }
  out.total = acc;
  return out;
}

// Value of the extended cumulative F at the polynomial level for the point
// t + d, where t ranges over [lo, hi] (one knot interval of the new spline).
Poly cumulative_piece(const Cumulative& cum, const PiecewisePolynomial& p,
                      double lo, double hi, double d) {
  const double probe = 0.5 * (lo + hi) + d;
  if (probe <= p.breakpoints.front()) return Poly{0.0};
  if (probe >= p.breakpoints.back()) return Poly{cum.total};
  for (size_t i = 0; i < p.pieces.size(); ++i) {
    if (probe < p.breakpoints[i + 1]) return poly_shift(cum.pieces[i], d);
  }
  return Poly{cum.total};
}

}  // namespace

PiecewisePolynomial bspline(int n) {
  if (n < 1 || n > 12) {
    throw std::invalid_argument("B-spline order must be in 1..12");
  }
  PiecewisePolynomial b;
  b.breakpoints = {-0.5, 0.5};
  b.pieces = {{1.0}};
  for (int k = 1; k < n; ++k) {
    const Cumulative cum = cumulative(b);
    PiecewisePolynomial next;
    const int pieces = k + 1;
    for (int i = 0; i <= pieces; ++i) {
      next.breakpoints.push_back(-0.5 * (k + 1) + i);
    }
    for (int i = 0; i < pieces; ++i) {
      const double lo = next.breakpoints[i];
      const double hi = next.breakpoints[i + 1];
      next.pieces.push_back(poly_sub(cumulative_piece(cum, b, lo, hi, 0.5),
                                     cumulative_piece(cum, b, lo, hi, -0.5)));
    }
    b = std::move(next);
  }
  return b;
}

double eval_pp(const PiecewisePolynomial& p, double t) {
  if (t < p.breakpoints.front() || t > p.breakpoints.back()) return 0.0;
  for (size_t i = 0; i < p.pieces.size(); ++i) {
    if (t <= p.breakpoints[i + 1]) return poly_eval(p.pieces[i], t);
  }
  return 0.0;
}

double pp_integral(const PiecewisePolynomial& p) {
  double acc = 0.0;
  for (size_t i = 0; i < p.pieces.size(); ++i) {
    const Poly prim = poly_antideriv(p.pieces[i]);
    acc += poly_eval(prim, p.breakpoints[i + 1]) -
           poly_eval(prim, p.breakpoints[i]);
  }
  return acc;
}

double sinc(double t) {
  const double x = kPi * t;
  if (std::abs(t) < 1e-6) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

CohenKernelSpec CohenKernelSpec::bj_order(int n) {
  if (n < 0 || n > 12) {
    throw std::invalid_argument("Born-Jordan order must be in 0..12");
  }
  CohenKernelSpec s;
  s.order = n;
  return s;
}

CohenKernelSpec CohenKernelSpec::custom_kernel(RMat samples) {
  CohenKernelSpec s;
  s.custom = std::move(samples);
  return s;
}

KernelMatrix theta_grid(const CohenKernelSpec& spec, int n) {
  KernelMatrix out;
  if (spec.is_custom()) {
    if (spec.custom->rows() != n || spec.custom->cols() != n) {
      throw std::invalid_argument("custom kernel shape mismatch");
    }
    out.values = *spec.custom;
    return out;
  }
  out.values.resize(n, n);
  for (int a = 0; a < n; ++a) {
    const double z1 = 2.0 * signed_index(a, n);
    for (int b = 0; b < n; ++b) {
      const double z2 = static_cast<double>(signed_index(b, n)) / n;
      const double s = sinc(z1 * z2);
      double v = 1.0;
      for (int i = 0; i < spec.order; ++i) v *= s;
      out.values(a, b) = v;
    }
  }
  return out;
}

double bspline_ft_check(int n, double step, double xi_max) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("check supports orders 1..8");
  }
  const PiecewisePolynomial b = bspline(n);
  double worst = 0.0;
  for (double xi = -xi_max; xi <= xi_max + 1e-12; xi += 0.125) {
    std::complex<double> acc = 0.0;
    // midpoint rule, subdividing each knot interval exactly
    for (size_t i = 0; i < b.pieces.size(); ++i) {
      const double lo = b.breakpoints[i];
      const double hi = b.breakpoints[i + 1];
      const int m = static_cast<int>(std::lround((hi - lo) / step));
      const double h = (hi - lo) / m;
      for (int j = 0; j < m; ++j) {
        const double t = lo + (j + 0.5) * h;
        const double ph = -2.0 * kPi * xi * t;
        acc += poly_eval(b.pieces[i], t) * h *
               std::complex<double>(std::cos(ph), std::sin(ph));
      }
    }
    double target = 1.0;
    for (int i = 0; i < n; ++i) target *= sinc(xi);
    worst = std::max(worst, std::abs(acc - target));
  }
  return worst;
}

}  // namespace bjlab
