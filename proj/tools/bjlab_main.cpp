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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bjlab/presets.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Quadratic time-frequency distributions with Born-Jordan "
               "kernel smoothing"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Execute an experiment preset");
  std::string config_path;
  bjlab::ExperimentConfig flags;
  std::string scale_name;
  double db_floor = 0.0;
  run->add_option("--config", config_path, "key = value configuration file");
  run->add_option("--preset", flags.preset,
                  "four-atoms | rotated | two-atoms | dilation | music");
  run->add_option("--n", flags.n, "signal length (0 = preset default)");
  run->add_option("--orders", flags.orders, "Born-Jordan orders")
      ->delimiter(',');
  run->add_option("--width", flags.width, "atom width in samples");
  run->add_option("--angle", flags.angle, "rotation angle in radians");
  run->add_option("--pair", flags.pair, "two-atoms variant: axis | diagonal");
  run->add_option("--threshold", flags.threshold, "ghost-count threshold");
  run->add_option("--wav", flags.wav_path, "input WAV file (music preset)");
  run->add_option("--wav-start", flags.wav_start, "WAV window start sample");
  run->add_option("--wav-length", flags.wav_length, "WAV window length");
  run->add_option("--out", flags.out_dir, "output directory");
  run->add_option("--scale", scale_name, "render scale: linear | db");
  run->add_option("--db-floor", db_floor, "dB floor for db scale");

  // render
  auto* render = app.add_subcommand("render", "Render a distribution CSV");
  std::string render_in, render_out, render_scale = "linear";
  double render_floor = -60.0;
  render->add_option("--input", render_in, "distribution CSV (n,k,re,im)")
      ->required();
  render->add_option("--output", render_out, "PGM output path")->required();
  render->add_option("--scale", render_scale, "linear | db");
  render->add_option("--db-floor", render_floor, "dB floor for db scale");

  // selfcheck
  auto* check = app.add_subcommand("selfcheck", "Run the invariant suite");
  double kappa_scale = 1.0;
  check->add_option("--kappa-scale", kappa_scale,
                    "scale the Moyal constant (diagnostic)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      bjlab::ExperimentConfig cfg;
      if (!config_path.empty()) bjlab::apply_config_file(cfg, config_path);
      // Flags override the config file.
      if (run->count("--preset")) cfg.preset = flags.preset;
      if (run->count("--n")) cfg.n = flags.n;
      if (run->count("--orders")) cfg.orders = flags.orders;
      if (run->count("--width")) cfg.width = flags.width;
      if (run->count("--angle")) cfg.angle = flags.angle;
      if (run->count("--pair")) cfg.pair = flags.pair;
      if (run->count("--threshold")) cfg.threshold = flags.threshold;
      if (run->count("--wav")) cfg.wav_path = flags.wav_path;
      if (run->count("--wav-start")) cfg.wav_start = flags.wav_start;
      if (run->count("--wav-length")) cfg.wav_length = flags.wav_length;
      if (run->count("--out")) cfg.out_dir = flags.out_dir;
      if (run->count("--scale")) {
        if (scale_name == "linear") {
          cfg.scale.db = false;
        } else if (scale_name == "db") {
          cfg.scale.db = true;
        } else {
          throw std::invalid_argument("scale must be linear or db");
        }
      }
      if (run->count("--db-floor")) cfg.scale.floor_db = db_floor;
      bjlab::run_experiment(cfg);
      return 0;
    }
    if (render->parsed()) {
      const bjlab::TFDistribution d = bjlab::read_distribution_csv(render_in);
      bjlab::RenderScale scale;
      if (render_scale == "db") {
        scale.db = true;
      } else if (render_scale != "linear") {
        throw std::invalid_argument("scale must be linear or db");
      }
      scale.floor_db = render_floor;
      bjlab::write_pgm(render_out, d, scale);
      return 0;
    }
    if (check->parsed()) {
      return bjlab::selfcheck(std::cout, kappa_scale) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
