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

#ifndef BJLAB_IO_HPP
#define BJLAB_IO_HPP

#include <string>

#include <json.hpp>

#include "bjlab/transforms.hpp"

namespace bjlab {

// 17 significant digits, enough to round-trip any double exactly.
std::string format_double(double v);

// Header `index,re,im`, one row per sample.
void write_signal_csv(const std::string& path, const Signal& f);

// Header `n,k,re,im`, row-major over the matrix.
void write_matrix_csv(const std::string& path, const CMat& m);
CMat read_matrix_csv(const std::string& path);

void write_distribution_csv(const std::string& path, const TFDistribution& d);
TFDistribution read_distribution_csv(const std::string& path);

// Sidecar metadata: axes, steps, kind, normalization constants.
nlohmann::json distribution_metadata(const TFDistribution& d);
void write_json(const std::string& path, const nlohmann::json& j);

struct RenderScale {
  bool db = false;
  double floor_db = -60.0;
};

// 8-bit PGM (P5); row 0 = highest frequency. Linear scale maps
// [0, max|D|] -> [255, 0]; db scale maps [floor_db, 0] dB of |D|/max
// -> [255, 0] with clipping.
void write_pgm(const std::string& path, const TFDistribution& d,
               const RenderScale& scale);

// PCM WAV, 16-bit, 1-2 channels (averaged to mono). start/length select a
// sample window; length < 0 keeps everything from start.
Signal load_wav(const std::string& path, long start = 0, long length = -1);
void save_wav(const std::string& path, const Signal& f, int sample_rate);

}  // namespace bjlab

#endif  // BJLAB_IO_HPP
