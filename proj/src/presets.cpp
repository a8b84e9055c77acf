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

#include "bjlab/presets.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bjlab {

namespace {

constexpr double kPi = std::numbers::pi;

namespace fs = std::filesystem;

std::string class_name(PairClass c) {
  switch (c) {
    case PairClass::on_axis_time:
      return "on_axis_time";
    case PairClass::on_axis_freq:
      return "on_axis_freq";
    default:
      return "diagonal";
  }
}

nlohmann::json report_json(const DampingReport& r, int n) {
  nlohmann::json j;
  j["grid_size"] = n;
  j["tf_cell_area"] = tf_cell_area(n);
  j["orders"] = r.orders;
  j["threshold_fraction"] = r.threshold_fraction;
  j["cluster_radius_time_samples"] = r.cluster_radii.time_samples;
  j["cluster_radius_freq_cps"] = r.cluster_radii.freq_cps;
  j["ghost_counts"] = r.ghost_counts;
  j["region_overlap"] = r.region_overlap;
  j["auto_energies"] = r.auto_energies;
  nlohmann::json pairs = nlohmann::json::array();
  for (const PairRecord& p : r.pairs) {
    nlohmann::json pj;
    pj["atoms"] = {p.first_atom, p.second_atom};
    pj["classification"] = class_name(p.classification);
    pj["energies"] = p.energies;
    pj["mid_freq"] = p.mid_freq;
    pj["mid_time"] = p.mid_time;
    pj["ratios"] = p.ratios;
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  return j;
}

void check_orders(const std::vector<int>& orders) {
  if (orders.empty()) throw std::invalid_argument("no orders requested");
  for (int n : orders) {
    if (n < 0 || n > 12) {
      throw std::invalid_argument("orders must lie in 0..12");
    }
  }
}

// Three-note chord with harmonics and staggered Gaussian envelopes; serves
// as a stand-in when the music preset is given no WAV file.
Signal music_standin(int n) {
  const double rate = 8000.0;
  const double notes[3] = {220.0, 277.18, 329.63};
  Signal out;
  out.sample_period = 1.0 / rate;
  out.label = "music-standin";
  out.samples = CVec::Zero(n);
  for (int v = 0; v < 3; ++v) {
    const double center = n * (0.3 + 0.2 * v);
    const double spread = n / 6.0;
    for (int h = 1; h <= 2; ++h) {
      const double omega = notes[v] * h / rate;
      const double amp = 0.3 / h;
      for (int j = 0; j < n; ++j) {
        const double t = (j - center) / spread;
        out.samples[j] +=
            amp * std::exp(-kPi * t * t) * std::cos(2.0 * kPi * omega * j);
      }
    }
  }
  return out;
}

struct Resolved {
  ExperimentConfig cfg;
  Constellation constellation;  // empty for dilation/music
  Signal signal;
  ClusterRadii radii;
};

Resolved resolve(const ExperimentConfig& in) {
  Resolved r;
  r.cfg = in;
  ExperimentConfig& c = r.cfg;
  check_orders(c.orders);
  if (c.threshold <= 0.0 || c.threshold >= 1.0) {
    throw std::invalid_argument("threshold must lie in (0,1)");
  }
  if (c.preset == "four-atoms") {
    if (c.n == 0) c.n = 128;
    if (c.width == 0.0) c.width = 12.0;
    r.constellation = four_atom_constellation(c.n, c.width);
    r.signal = synthesize(r.constellation);
    r.radii = default_cluster_radii(c.n);
  } else if (c.preset == "rotated") {
    if (c.n == 0) c.n = 512;
    if (c.width == 0.0) c.width = 28.0;
    if (c.angle == 0.0) c.angle = kPi / 9.0;
    // Same rhombus, scaled with the grid so the delay-doppler products (and
    // with them the sinc^n damping) grow with N.
    Constellation base;
    base.length = c.n;
    const double s = c.n / 128.0;
    base.atoms = {{20.0 * s, 0.25, {1.0, 0.0}, c.width},
                  {40.0 * s, 0.15, {1.0, 0.0}, c.width},
                  {40.0 * s, 0.35, {1.0, 0.0}, c.width},
                  {60.0 * s, 0.25, {1.0, 0.0}, c.width}};
    r.constellation = rotate_constellation(base, c.angle);
    r.signal = synthesize(r.constellation);
    r.radii = {3.0 * c.n / 64.0, 22.5 / c.n};
  } else if (c.preset == "two-atoms") {
    if (c.n == 0) c.n = 128;
    if (c.width == 0.0) c.width = 4.0;
    const double s = c.n / 128.0;
    Constellation pair;
    pair.length = c.n;
    if (c.pair == "axis") {
      pair.atoms = {{64.0 * s, 0.15, {1.0, 0.0}, c.width},
                    {64.0 * s, 0.35, {1.0, 0.0}, c.width}};
    } else if (c.pair == "diagonal") {
      pair.atoms = {{46.0 * s, 0.18, {1.0, 0.0}, c.width},
                    {82.0 * s, 0.32, {1.0, 0.0}, c.width}};
    } else {
      throw std::invalid_argument("pair must be axis or diagonal");
    }
    r.constellation = pair;
    r.signal = synthesize(pair);
    r.radii = default_cluster_radii(c.n);
  } else if (c.preset == "dilation") {
    if (c.n == 0) c.n = 512;
  } else if (c.preset == "music") {
    if (c.n == 0) c.n = 512;
    if (c.n % 2 != 0) throw std::invalid_argument("N must be even");
  } else {
    throw std::invalid_argument("unknown preset: " + c.preset);
  }
  return r;
}

}  // namespace

Constellation four_atom_constellation(int n, double width) {
  Constellation c;
  c.length = n;
  c.atoms = {{20.0, 0.25, {1.0, 0.0}, width},
             {40.0, 0.15, {1.0, 0.0}, width},
             {40.0, 0.35, {1.0, 0.0}, width},
             {60.0, 0.25, {1.0, 0.0}, width}};
  return c;
}

void run_experiment(const ExperimentConfig& config) {
  Resolved r = resolve(config);
  const ExperimentConfig& c = r.cfg;

  if (c.preset == "dilation") {
    const std::vector<double> lambdas = {0.5, 1.0, 2.0};
    const DilationFit fit = dilation_scaling(lambdas, c.n);
    fs::create_directories(c.out_dir);
    nlohmann::json j;
    j["grid_size"] = c.n;
    j["lambdas"] = lambdas;
    j["slope"] = fit.slope;
    j["unit_defect"] = fit.unit_defect;
    write_json((fs::path(c.out_dir) / "slope.json").string(), j);
    return;
  }

  if (c.preset == "music") {
    Signal raw = c.wav_path.empty()
                     ? music_standin(c.n)
                     : load_wav(c.wav_path, c.wav_start,
                                c.wav_length < 0 ? c.n : c.wav_length);
    if (raw.size() < c.n) {
      throw std::invalid_argument("music window shorter than N");
    }
    raw.samples.conservativeResize(c.n);
    const Signal f = analytic_projection(raw);
    const TFDistribution spec = spectrogram(f);
    fs::create_directories(c.out_dir);
    if (c.wav_path.empty()) {
      save_wav((fs::path(c.out_dir) / "standin.wav").string(), raw, 8000);
    }
    write_distribution_csv((fs::path(c.out_dir) / "spectrogram.csv").string(),
                           spec);
    write_json((fs::path(c.out_dir) / "spectrogram.json").string(),
               distribution_metadata(spec));
    write_pgm((fs::path(c.out_dir) / "spectrogram.pgm").string(), spec,
              c.scale);
    for (int n : c.orders) {
      const TFDistribution d = bjd(f, n).distribution;
      const std::string stem = "dist_n" + std::to_string(n);
      write_distribution_csv((fs::path(c.out_dir) / (stem + ".csv")).string(),
                             d);
      write_json((fs::path(c.out_dir) / (stem + ".json")).string(),
                 distribution_metadata(d));
      write_pgm((fs::path(c.out_dir) / (stem + ".pgm")).string(), d, c.scale);
    }
    return;
  }

  // Constellation presets: compute everything before touching the disk so a
  // failed precondition leaves no partial output.
  std::vector<TFDistribution> dists;
  for (int n : c.orders) dists.push_back(bjd(r.signal, n).distribution);
  const DampingReport report = cross_term_report(
      r.signal, r.constellation, c.orders, c.threshold, r.radii);

  fs::create_directories(c.out_dir);
  for (size_t i = 0; i < c.orders.size(); ++i) {
    const std::string stem = "dist_n" + std::to_string(c.orders[i]);
    write_distribution_csv((fs::path(c.out_dir) / (stem + ".csv")).string(),
                           dists[i]);
    write_json((fs::path(c.out_dir) / (stem + ".json")).string(),
               distribution_metadata(dists[i]));
    write_pgm((fs::path(c.out_dir) / (stem + ".pgm")).string(), dists[i],
              c.scale);
  }
  write_json((fs::path(c.out_dir) / "report.json").string(),
             report_json(report, c.n));
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const size_t eq = line.find('=');
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    }
    auto trim = [](std::string s) {
      const size_t a = s.find_first_not_of(" \t");
      const size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "preset") {
      config.preset = val;
    } else if (key == "n") {
      config.n = std::stoi(val);
    } else if (key == "orders") {
      config.orders.clear();
      std::stringstream ss(val);
      std::string tok;
      while (std::getline(ss, tok, ',')) config.orders.push_back(std::stoi(tok));
    } else if (key == "width") {
      config.width = std::stod(val);
    } else if (key == "angle") {
      config.angle = std::stod(val);
    } else if (key == "pair") {
      config.pair = val;
    } else if (key == "threshold") {
      config.threshold = std::stod(val);
    } else if (key == "wav") {
      config.wav_path = val;
    } else if (key == "wav_start") {
      config.wav_start = std::stol(val);
    } else if (key == "wav_length") {
      config.wav_length = std::stol(val);
    } else if (key == "out") {
      config.out_dir = val;
    } else if (key == "scale") {
      if (val == "linear") {
        config.scale.db = false;
      } else if (val == "db") {
        config.scale.db = true;
      } else {
        throw std::runtime_error("scale must be linear or db");
      }
    } else if (key == "db_floor") {
      config.scale.floor_db = std::stod(val);
    } else {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key " + key);
    }
  }
}

namespace {

CVec random_vector(std::mt19937& rng, int n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  CVec v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(dist(rng), dist(rng));
  return v;
}

}  // namespace

bool selfcheck(std::ostream& out, double kappa_scale) {
  bool all_ok = true;
  auto item = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all_ok = all_ok && ok;
  };
  std::mt19937 rng(20260823);

  {
    const int n = 12;
    const CVec v = random_vector(rng, n);
    const CVec d = dft(v);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex acc = 0.0;
      for (int j = 0; j < n; ++j) {
        const double ph = -2.0 * kPi * j * k / n;
        acc += v[j] * Complex(std::cos(ph), std::sin(ph));
      }
      worst = std::max(worst, std::abs(acc - d[k]));
    }
    item("dft matches direct sum (N=12)", worst < 1e-10);
    item("idft inverts dft", (idft(d) - v).cwiseAbs().maxCoeff() < 1e-12);
  }
  {
    const int n = 12;
    Signal f, g;
    f.samples = random_vector(rng, n);
    g.samples = random_vector(rng, n);
    const TFDistribution w = cross_wigner(f, g);
    double worst = 0.0;
    for (int r = 0; r < n; ++r) {
      for (int k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (int m = -n / 2; m < n / 2; ++m) {
          const int i1 = r + m, i2 = r - m;
          if (i1 < 0 || i1 >= n || i2 < 0 || i2 >= n) continue;
          const double ph = -2.0 * kPi * k * m / n;
          acc += f.samples[i1] * std::conj(g.samples[i2]) *
                 Complex(std::cos(ph), std::sin(ph));
        }
        worst = std::max(worst, std::abs(2.0 * acc - w.values(r, k)));
      }
    }
    item("cross-Wigner matches direct sum (N=12)", worst < 1e-10);
  }
  {
    const int n = 64;
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.row(i) = random_vector(rng, n).transpose();
    const CMat twice = symplectic_2d(
        symplectic_2d(m, tf_cell_area(n)), ambiguity_cell_area(n));
    const double err =
        (twice - m).cwiseAbs().maxCoeff() / m.cwiseAbs().maxCoeff();
    item("symplectic transform is an involution", err < 1e-12);
  }
  {
    const int n = 64;
    Signal f;
    f.samples = random_vector(rng, n);
    const TFDistribution w = wigner(f);
    const TFDistribution q = bjd(f, 0).distribution;
    const double err = (q.values - w.values).cwiseAbs().maxCoeff() /
                       w.values.cwiseAbs().maxCoeff();
    item("order-0 kernel reproduces the Wigner distribution", err < 1e-12);
  }
  {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      worst = std::max(worst, smoothing_multiplier_check(n, 64));
    }
    item("smoothing multiplier identity (orders 1..4)", worst < 1e-10);
  }
  {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      worst = std::max(worst, bspline_ft_check(n));
    }
    item("B-spline Fourier transforms match sinc powers", worst < 1e-3);
  }
  {
    const double kappa = moyal_kappa() * kappa_scale;
    AtomSpec a, b;
    a.time_center = 24.0;
    a.freq_center = 0.2;
    a.width = 5.0;
    b.time_center = 40.0;
    b.freq_center = 0.3;
    b.width = 5.0;
    const Signal fa = gaussian(64, a);
    const Signal fb = gaussian(64, b);
    const double d1 = moyal_check(fa, fa, kappa);
    const double d2 = moyal_check(fa, fb, kappa);
    item("Moyal consistency with frozen kappa",
         d1 <= 1e-2 && d2 <= 1e-2);
  }
  {
    AtomSpec a;
    a.time_center = 32.0;
    a.freq_center = 0.25;
    a.width = 6.0;
    const Signal f = gaussian(64, a);
    const AmbiguityMatrix amb = ambiguity(f, f);
    const double expect = f.samples.squaredNorm();
    const double err = std::abs(amb.values(0, 0).real() - expect) / expect;
    item("ambiguity origin equals signal energy", err < 1e-10);
  }
  return all_ok;
}

}  // namespace bjlab
