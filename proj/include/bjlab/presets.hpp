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

#ifndef BJLAB_PRESETS_HPP
#define BJLAB_PRESETS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bjlab/analysis.hpp"
#include "bjlab/io.hpp"

namespace bjlab {

struct ExperimentConfig {
  std::string preset = "four-atoms";  // four-atoms | rotated | two-atoms |
                                      // dilation | music
  int n = 0;                          // 0 = preset default
  std::vector<int> orders = {0, 1, 3, 5};
  double width = 0.0;                 // 0 = preset default
  double angle = 0.0;                 // rotated preset, radians; 0 = default
  std::string pair = "diagonal";      // two-atoms: axis | diagonal
  double threshold = 0.1;
  std::string wav_path;               // music preset; empty = synthesized
  long wav_start = 0;
  long wav_length = -1;
  std::string out_dir = "out";
  RenderScale scale;
};

// The four-atom test constellation with its literal coordinates
// (20,.25),(40,.15),(40,.35),(60,.25); designed for N = 128.
Constellation four_atom_constellation(int n, double width);

// Executes a preset: writes per-order distribution CSV + JSON + PGM and a
// damping report (or the preset-specific artifacts). Fully deterministic.
// Throws on invalid configuration before writing anything.
void run_experiment(const ExperimentConfig& config);

// key = value lines; '#' starts a comment. Unknown keys are rejected.
void apply_config_file(ExperimentConfig& config, const std::string& path);

// Runs the invariant suite at small N, printing one PASS/FAIL line per item.
// kappa_scale multiplies the calibrated Moyal constant (1.0 = untouched);
// exposed so a corrupted constant is detectable by the suite itself.
bool selfcheck(std::ostream& out, double kappa_scale = 1.0);

}  // namespace bjlab

#endif  // BJLAB_PRESETS_HPP
