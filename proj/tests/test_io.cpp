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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "bjlab/io.hpp"

using namespace bjlab;

namespace {

namespace fs = std::filesystem;

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("format_double round trips") {
  for (double v : {0.0, 1.0, -1.5, 3.141592653589793, 1e-300, 123456.789,
                   0.1, 2.0 / 3.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("distribution CSV round trip is byte identical") {
  std::mt19937 rng(31);
  std::normal_distribution<double> dist(0.0, 1.0);
  CMat m(6, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  }
  const std::string p1 = temp_path("bjlab_io_a.csv");
  const std::string p2 = temp_path("bjlab_io_b.csv");
  write_matrix_csv(p1, m);
  const CMat back = read_matrix_csv(p1);
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
  write_matrix_csv(p2, back);
  CHECK(slurp(p1) == slurp(p2));
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("signal CSV header") {
  Signal f;
  f.samples = CVec::Ones(3);
  const std::string p = temp_path("bjlab_io_sig.csv");
  write_signal_csv(p, f);
  const std::string content = slurp(p);
  CHECK(content.rfind("index,re,im\n0,1,0\n", 0) == 0);
  std::remove(p.c_str());
}

TEST_CASE("distribution metadata fields") {
  TFDistribution d;
  d.values = CMat::Zero(8, 8);
  d.freq_step = tf_cell_area(8);
  d.kind = "wigner";
  const nlohmann::json j = distribution_metadata(d);
  CHECK(j["grid_size"] == 8);
  CHECK(j["kind"] == "wigner");
  CHECK(j["freq_step"] == tf_cell_area(8));
  CHECK(j.contains("dft_convention"));
  CHECK(j.contains("tf_cell_area"));
}

TEST_CASE("pgm rendering") {
  const int n = 128;
  TFDistribution d;
  d.values = CMat::Zero(n, n);
  d.freq_step = tf_cell_area(n);
  d.kind = "custom";
  const std::string p = temp_path("bjlab_io.pgm");

  write_pgm(p, d, RenderScale{});
  std::string content = slurp(p);
  CHECK(content.rfind("P5\n128 128\n255\n", 0) == 0);
  CHECK(content.size() == 15 + size_t(n) * n);
  // zero distribution renders white
  CHECK(static_cast<unsigned char>(content[15]) == 255);

  d.values(3, 5) = 2.0;  // time 3, frequency bin 5 -> image row n-1-5, col 3
  write_pgm(p, d, RenderScale{});
  content = slurp(p);
  CHECK(static_cast<unsigned char>(content[15 + (n - 1 - 5) * n + 3]) == 0);

  RenderScale db;
  db.db = true;
  db.floor_db = -40.0;
  write_pgm(p, d, db);
  content = slurp(p);
  CHECK(static_cast<unsigned char>(content[15 + (n - 1 - 5) * n + 3]) == 0);
  CHECK(static_cast<unsigned char>(content[15]) == 255);
  std::remove(p.c_str());
}

TEST_CASE("wav round trip") {
  const int n = 64;
  Signal f;
  f.samples.resize(n);
  for (int j = 0; j < n; ++j) {
    f.samples[j] = 0.8 * std::sin(2.0 * 3.141592653589793 * 0.05 * j);
  }
  const std::string p = temp_path("bjlab_io.wav");
  save_wav(p, f, 8000);
  const Signal back = load_wav(p);
  CHECK(back.size() == n);
  CHECK(back.sample_period == 1.0 / 8000);
  CHECK((back.samples - f.samples).cwiseAbs().maxCoeff() <= 1.0 / 32768);

  const Signal windowed = load_wav(p, 10, 20);
  CHECK(windowed.size() == 20);
  CHECK(windowed.samples[0] == back.samples[10]);
  CHECK_THROWS(load_wav(p, 60, 10));
  std::remove(p.c_str());
}

TEST_CASE("wav scaling and stereo averaging") {
  // hand-built 16-bit file: one stereo frame pair plus known mono samples
  const std::string p = temp_path("bjlab_io_stereo.wav");
  {
    std::ofstream out(p, std::ios::binary);
    auto u32 = [&](uint32_t v) {
      char b[4] = {char(v), char(v >> 8), char(v >> 16), char(v >> 24)};
      out.write(b, 4);
    };
    auto u16 = [&](uint16_t v) {
      char b[2] = {char(v), char(v >> 8)};
      out.write(b, 2);
    };
    out.write("RIFF", 4);
    u32(36 + 8);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    u32(16);
    u16(1);
    u16(2);  // stereo
    u32(44100);
    u32(44100 * 4);
    u16(4);
    u16(16);
    out.write("data", 4);
    u32(8);  // two frames
    u16(16384);
    u16(0);  // frame 0: L=0.5, R=0
    u16(uint16_t(int16_t(-16384)));
    u16(uint16_t(int16_t(-16384)));  // frame 1: both -0.5
  }
  const Signal s = load_wav(p);
  CHECK(s.size() == 2);
  CHECK(s.samples[0].real() == doctest::Approx(0.25));
  CHECK(s.samples[1].real() == doctest::Approx(-0.5));
  std::remove(p.c_str());

  CHECK_THROWS(load_wav(temp_path("bjlab_does_not_exist.wav")));
}
