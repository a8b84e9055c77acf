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

#include "bjlab/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bjlab {

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return b[0] | (b[1] << 8) | (b[2] << 16) | (uint32_t(b[3]) << 24);
}

uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& out, uint32_t v) {
  const char b[4] = {char(v & 0xff), char((v >> 8) & 0xff),
                     char((v >> 16) & 0xff), char((v >> 24) & 0xff)};
  out.write(b, 4);
}

void write_u16(std::ostream& out, uint16_t v) {
  const char b[2] = {char(v & 0xff), char((v >> 8) & 0xff)};
  out.write(b, 2);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_signal_csv(const std::string& path, const Signal& f) {
  std::ofstream out = open_out(path);
  out << "index,re,im\n";
  for (int j = 0; j < f.size(); ++j) {
    out << j << ',' << format_double(f.samples[j].real()) << ','
        << format_double(f.samples[j].imag()) << '\n';
  }
}

void write_matrix_csv(const std::string& path, const CMat& m) {
  std::ofstream out = open_out(path);
  out << "n,k,re,im\n";
  for (long i = 0; i < m.rows(); ++i) {
    for (long k = 0; k < m.cols(); ++k) {
      out << i << ',' << k << ',' << format_double(m(i, k).real()) << ','
          << format_double(m(i, k).imag()) << '\n';
    }
  }
}

CMat read_matrix_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line != "n,k,re,im") {
    throw std::runtime_error("bad CSV header in " + path);
  }
  struct Entry {
    long i, k;
    Complex v;
  };
  std::vector<Entry> entries;
  long max_i = -1, max_k = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Entry e;
    double re, im;
    if (std::sscanf(line.c_str(), "%ld,%ld,%lf,%lf", &e.i, &e.k, &re, &im) != 4) {
      throw std::runtime_error("bad CSV row in " + path + ": " + line);
    }
    e.v = Complex(re, im);
    entries.push_back(e);
    max_i = std::max(max_i, e.i);
    max_k = std::max(max_k, e.k);
  }
  if (max_i < 0) throw std::runtime_error("empty CSV: " + path);
  CMat m = CMat::Zero(max_i + 1, max_k + 1);
  for (const Entry& e : entries) m(e.i, e.k) = e.v;
  return m;
}

void write_distribution_csv(const std::string& path, const TFDistribution& d) {
  write_matrix_csv(path, d.values);
}

TFDistribution read_distribution_csv(const std::string& path) {
  TFDistribution d;
  d.values = read_matrix_csv(path);
  d.kind = "custom";
  d.freq_step = tf_cell_area(d.grid_size());
  return d;
}

nlohmann::json distribution_metadata(const TFDistribution& d) {
  nlohmann::json j;
  j["dft_convention"] = "forward unnormalized, inverse 1/N";
  j["freq_axis"] = "[0, 1/2) cycles/sample";
  j["freq_step"] = d.freq_step;
  j["grid_size"] = d.grid_size();
  j["imag_residual"] = d.imag_residual;
  j["kind"] = d.kind;
  j["tf_cell_area"] = tf_cell_area(d.grid_size());
  j["time_step"] = d.time_step;
  return j;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
}

void write_pgm(const std::string& path, const TFDistribution& d,
               const RenderScale& scale) {
  const int n = d.grid_size();
  const RMat a = d.values.cwiseAbs();
  if (!a.allFinite()) throw std::invalid_argument("non-finite distribution");
  const double peak = a.maxCoeff();
  std::ofstream out = open_out(path, true);
  out << "P5\n" << n << ' ' << n << "\n255\n";
  std::vector<unsigned char> row(n);
  // Image row 0 carries the highest frequency bin.
  for (int i = 0; i < n; ++i) {
    const int k = n - 1 - i;
    for (int t = 0; t < n; ++t) {
      const double v = peak > 0.0 ? a(t, k) / peak : 0.0;
      double pix;
      if (scale.db) {
        double db = v > 0.0 ? 20.0 * std::log10(v) : scale.floor_db;
        db = std::min(0.0, std::max(scale.floor_db, db));
        pix = 255.0 * db / scale.floor_db;
      } else {
        pix = 255.0 * (1.0 - v);
      }
      row[t] = static_cast<unsigned char>(std::lround(pix));
    }
    out.write(reinterpret_cast<const char*>(row.data()), n);
  }
}

Signal load_wav(const std::string& path, long start, long length) {
  std::ifstream in = open_in(path, true);
  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) {
    throw std::runtime_error(path + ": missing RIFF header at offset 0");
  }
  read_u32(in);  // chunk size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) {
    throw std::runtime_error(path + ": missing WAVE tag at offset 8");
  }
  uint16_t channels = 0, bits = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  while (in.read(tag, 4)) {
    const uint32_t size = read_u32(in);
    const std::streampos next = in.tellg() + std::streampos(size + (size & 1));
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      const uint16_t codec = read_u16(in);
      if (codec != 1) {
        throw std::runtime_error(path + ": unsupported codec " +
                                 std::to_string(codec) + " (PCM only)");
      }
      channels = read_u16(in);
      rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      bits = read_u16(in);
      if (bits != 16) {
        throw std::runtime_error(path + ": only 16-bit PCM supported");
      }
      if (channels < 1 || channels > 2) {
        throw std::runtime_error(path + ": need 1 or 2 channels");
      }
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) {
        throw std::runtime_error(path + ": data chunk before fmt chunk");
      }
      const long frames = size / (2 * channels);
      if (start < 0 || start > frames) {
        throw std::runtime_error(path + ": window start outside data");
      }
      const long want = length < 0 ? frames - start : length;
      if (start + want > frames) {
        throw std::runtime_error(path + ": window extends past data end");
      }
      in.seekg(std::streamoff(2 * channels * start), std::ios::cur);
      Signal out;
      out.sample_period = 1.0 / rate;
      out.label = path;
      out.samples.resize(want);
      for (long i = 0; i < want; ++i) {
        double acc = 0.0;
        for (int ch = 0; ch < channels; ++ch) {
          const int16_t s = static_cast<int16_t>(read_u16(in));
          acc += s / 32768.0;
        }
        out.samples[i] = acc / channels;
      }
      if (!in) throw std::runtime_error(path + ": truncated data chunk");
      return out;
    }
    in.seekg(next);
  }
  throw std::runtime_error(path + ": no data chunk found");
}

void save_wav(const std::string& path, const Signal& f, int sample_rate) {
  std::ofstream out = open_out(path, true);
  const uint32_t data_bytes = 2 * static_cast<uint32_t>(f.size());
  out.write("RIFF", 4);
  write_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, 1);  // mono
  write_u32(out, static_cast<uint32_t>(sample_rate));
  write_u32(out, static_cast<uint32_t>(sample_rate) * 2);
  write_u16(out, 2);
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, data_bytes);
  for (int i = 0; i < f.size(); ++i) {
    double v = f.samples[i].real();
    v = std::min(1.0 - 1.0 / 32768.0, std::max(-1.0, v));
    write_u16(out, static_cast<uint16_t>(
                       static_cast<int16_t>(std::lround(v * 32768.0))));
  }
}

}  // namespace bjlab
