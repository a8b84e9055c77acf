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

#include "bjlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bjlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct GridBox {
  int i0, i1, k0, k1;  // inclusive
  bool empty;
};

GridBox clip_region(const TFDistribution& d, const RegionSpec& r) {
  if (r.time_half_width <= 0.0 || r.freq_half_width <= 0.0) {
    throw std::invalid_argument("region half-widths must be positive");
  }
  const int n = d.grid_size();
  GridBox b{};
  b.i0 = std::max(0, static_cast<int>(std::floor(r.time_center - r.time_half_width)));
  b.i1 = std::min(n - 1, static_cast<int>(std::ceil(r.time_center + r.time_half_width)));
  const double kc = r.freq_center / d.freq_step;
  const double kh = r.freq_half_width / d.freq_step;
  b.k0 = std::max(0, static_cast<int>(std::floor(kc - kh)));
  b.k1 = std::min(n - 1, static_cast<int>(std::ceil(kc + kh)));
  b.empty = b.i0 > b.i1 || b.k0 > b.k1;
  return b;
}

bool boxes_overlap(const GridBox& a, const GridBox& b) {
  return a.i0 <= b.i1 && b.i0 <= a.i1 && a.k0 <= b.k1 && b.k0 <= a.k1;
}

struct Peak {
  int i, k;
  double v;
};

std::vector<Peak> local_maxima(const TFDistribution& d, double threshold) {
  const int n = d.grid_size();
  const RMat a = d.values.cwiseAbs();
  const double floor_v = threshold * a.maxCoeff();
  std::vector<Peak> out;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double v = a(i, k);
      if (v < floor_v) continue;
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dk = -1; dk <= 1; ++dk) {
          const int ii = i + di, kk = k + dk;
          if (ii < 0 || ii >= n || kk < 0 || kk >= n) continue;
          if (a(ii, kk) > v) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) out.push_back({i, k, v});
    }
  }
  return out;
}

}  // namespace

double region_energy(const TFDistribution& d, const RegionSpec& r) {
  const GridBox b = clip_region(d, r);
  if (b.empty) throw std::invalid_argument("region does not intersect the grid");
  double acc = 0.0;
  for (int i = b.i0; i <= b.i1; ++i) {
    for (int k = b.k0; k <= b.k1; ++k) {
      acc += std::norm(d.values(i, k));
    }
  }
  return acc * tf_cell_area(d.grid_size());
}

ClusterRadii default_cluster_radii(int n) {
  return {3.0 * n / 64.0, 10.5 / n};
}

int ghost_count(const TFDistribution& d, double threshold_fraction) {
  return ghost_count(d, threshold_fraction,
                     default_cluster_radii(d.grid_size()));
}

int ghost_count(const TFDistribution& d, double threshold_fraction,
                const ClusterRadii& radii) {
  if (threshold_fraction <= 0.0 || threshold_fraction >= 1.0) {
    throw std::invalid_argument("threshold fraction must lie in (0,1)");
  }
  std::vector<Peak> peaks = local_maxima(d, threshold_fraction);
  // Strongest-first suppression: a peak within both radii of an already
  // accepted cluster center belongs to that cluster. Transitive chain
  // merging is deliberately avoided; fringe maxima between two spots would
  // otherwise fuse the spots into one cluster.
  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const Peak& a, const Peak& b) { return a.v > b.v; });
  const double rk = radii.freq_cps / d.freq_step;
  std::vector<Peak> centers;
  for (const Peak& p : peaks) {
    bool absorbed = false;
    for (const Peak& c : centers) {
      if (std::abs(p.i - c.i) <= radii.time_samples &&
          std::abs(p.k - c.k) <= rk) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) centers.push_back(p);
  }
  return static_cast<int>(centers.size());
}

DampingReport cross_term_report(const Signal& f, const Constellation& c,
                                const std::vector<int>& orders) {
  return cross_term_report(f, c, orders, 0.1,
                           default_cluster_radii(c.length));
}

DampingReport cross_term_report(const Signal& f, const Constellation& c,
                                const std::vector<int>& orders,
                                double threshold_fraction,
                                const ClusterRadii& radii) {
  if (orders.empty()) throw std::invalid_argument("no orders requested");
  if (f.size() != c.length) {
    throw std::invalid_argument("signal length does not match constellation");
  }
  DampingReport report;
  report.orders = orders;
  report.threshold_fraction = threshold_fraction;
  report.cluster_radii = radii;

  const int atoms = static_cast<int>(c.atoms.size());
  std::vector<RegionSpec> auto_regions(atoms);
  for (int i = 0; i < atoms; ++i) {
    const AtomSpec& a = c.atoms[i];
    auto_regions[i] = {a.time_center, a.freq_center, 3.0 * a.width,
                       3.0 / (2.0 * kPi * a.width)};
  }
  std::vector<PairRecord> pairs;
  std::vector<RegionSpec> cross_regions;
  for (int i = 0; i < atoms; ++i) {
    for (int j = i + 1; j < atoms; ++j) {
      const AtomSpec& a = c.atoms[i];
      const AtomSpec& b = c.atoms[j];
      PairRecord rec;
      rec.first_atom = i;
      rec.second_atom = j;
      rec.mid_time = 0.5 * (a.time_center + b.time_center);
      rec.mid_freq = 0.5 * (a.freq_center + b.freq_center);
      const bool same_t = a.time_center == b.time_center;
      const bool same_f = a.freq_center == b.freq_center;
      rec.classification = same_t   ? PairClass::on_axis_time
                           : same_f ? PairClass::on_axis_freq
                                    : PairClass::diagonal;
      const double w = 0.5 * (a.width + b.width);
      cross_regions.push_back(
          {rec.mid_time, rec.mid_freq, 3.0 * w, 3.0 / (2.0 * kPi * w)});
      pairs.push_back(rec);
    }
  }

  // Baseline Wigner distribution is always computed for the n=0 ratios.
  const TFDistribution base = bjd(f, 0).distribution;
  for (size_t p = 0; p < pairs.size(); ++p) {
    for (const RegionSpec& ar : auto_regions) {
      if (boxes_overlap(clip_region(base, cross_regions[p]),
                        clip_region(base, ar))) {
        report.region_overlap = true;
      }
    }
  }

  report.auto_energies.assign(atoms, {});
  for (int n : orders) {
    const TFDistribution d =
        n == 0 ? base : bjd(f, n).distribution;
    for (size_t p = 0; p < pairs.size(); ++p) {
      const double e = region_energy(d, cross_regions[p]);
      const double e0 = region_energy(base, cross_regions[p]);
      pairs[p].energies.push_back(e);
      pairs[p].ratios.push_back(e0 > 0.0 ? e / e0 : 0.0);
    }
    for (int i = 0; i < atoms; ++i) {
      report.auto_energies[i].push_back(region_energy(d, auto_regions[i]));
    }
    report.ghost_counts.push_back(ghost_count(d, threshold_fraction, radii));
  }
  report.pairs = pairs;
  return report;
}

double moyal_kappa() {
  // One-time calibration on a band-centered, well-resolved unit Gaussian;
  // the value depends only on the grid conventions, not on N, and is cached.
  static const double kappa = [] {
    AtomSpec spec;
    spec.time_center = 64.0;
    spec.freq_center = 0.25;
    spec.width = 8.0;
    const Signal phi = gaussian(128, spec);
    const TFDistribution w = wigner(phi);
    const double ip = phi.samples.squaredNorm();
    const double ww = w.values.real().array().square().sum() *
                      tf_cell_area(w.grid_size());
    return ip * ip / ww;
  }();
  return kappa;
}

double moyal_check(const Signal& f, const Signal& g) {
  return moyal_check(f, g, moyal_kappa());
}

double moyal_check(const Signal& f, const Signal& g, double kappa) {
  const TFDistribution wf = wigner(f);
  const TFDistribution wg = wigner(g);
  const double lhs = kappa *
                     (wf.values.real().cwiseProduct(wg.values.real())).sum() *
                     tf_cell_area(wf.grid_size());
  const Complex ip = g.samples.dot(f.samples);
  const double rhs = std::norm(ip);
  const double scale = f.samples.squaredNorm() * g.samples.squaredNorm();
  if (rhs < 1e-12 * scale) return std::abs(lhs - rhs);
  return std::abs(lhs - rhs) / rhs;
}

DilationFit dilation_scaling(const std::vector<double>& lambdas, int n) {
  if (lambdas.size() < 3) {
    throw std::invalid_argument("need at least 3 dilation factors");
  }
  const double sigma0 = 16.0;
  for (double lam : lambdas) {
    if (!(sigma0 / lam >= 4.0) || !(sigma0 * lam <= n / 8.0)) {
      throw std::domain_error(
          "dilation factor leaves the Gaussian unresolved on this grid "
          "(need sigma/lambda >= 4 and sigma*lambda <= N/8)");
    }
  }
  auto norm_at = [&](double lam) {
    AtomSpec spec;
    spec.time_center = n / 2.0;
    spec.freq_center = 0.25;
    spec.width = sigma0 / lam;
    const Signal phi = gaussian(n, spec);
    const TFDistribution w = wigner(phi);
    return std::sqrt(w.values.real().array().square().sum() *
                     tf_cell_area(n));
  };
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double lam : lambdas) {
    const double x = std::log(lam);
    const double y = std::log(norm_at(lam));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(lambdas.size());
  DilationFit fit;
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  AtomSpec unit;
  unit.time_center = n / 2.0;
  unit.freq_center = 0.25;
  unit.width = sigma0;
  const double l2sq = gaussian(n, unit).samples.squaredNorm();
  fit.unit_defect = std::abs(norm_at(1.0) - l2sq) / l2sq;
  return fit;
}

}  // namespace bjlab
