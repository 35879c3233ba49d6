// Copyright 2026 The tdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdesign/table_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "tdesign/errors.hpp"

namespace tdesign {

std::string format_value(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

double parse_value(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError("malformed numeric field '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

CsvWriter::CsvWriter(std::string path, const std::vector<std::string>& columns)
    : path_(std::move(path)), n_columns_(columns.size()) {
  if (columns.empty()) throw ArgumentError("table needs at least one column");
  FILE* f = std::fopen(path_.c_str(), "wb");
  if (!f) throw ResourceError("cannot open '" + path_ + "' for writing");
  stream_ = f;
  std::string header;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) header += ",";
    header += columns[i];
  }
  header += "\n";
  if (std::fwrite(header.data(), 1, header.size(), f) != header.size()) {
    std::fclose(f);
    stream_ = nullptr;
    abort_file();
    throw ResourceError("write failure on '" + path_ + "'");
  }
}

CsvWriter::~CsvWriter() {
  if (stream_) std::fclose(static_cast<FILE*>(stream_));
}

void CsvWriter::append(const std::vector<double>& row) {
  if (!stream_ || closed_) throw ResourceError("writer is closed");
  if (row.size() != n_columns_) {
    throw ArgumentError("row width disagrees with the header");
  }
  std::string line;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) line += ",";
    line += format_value(row[i]);
  }
  line += "\n";
  FILE* f = static_cast<FILE*>(stream_);
  if (std::fwrite(line.data(), 1, line.size(), f) != line.size() ||
      std::fflush(f) != 0) {
    std::fclose(f);
    stream_ = nullptr;
    abort_file();
    throw ResourceError("write failure on '" + path_ + "'");
  }
}

void CsvWriter::close() {
  if (closed_) return;
  closed_ = true;
  if (stream_) {
    FILE* f = static_cast<FILE*>(stream_);
    stream_ = nullptr;
    if (std::fclose(f) != 0) {
      abort_file();
      throw ResourceError("close failure on '" + path_ + "'");
    }
  }
}

void CsvWriter::abort_file() {
  if (stream_) {
    std::fclose(static_cast<FILE*>(stream_));
    stream_ = nullptr;
  }
  closed_ = true;
  std::error_code ec;
  std::filesystem::remove(path_, ec);
}

void write_csv(const std::string& path, const Table& table) {
  CsvWriter w(path, table.columns);
  for (const auto& row : table.rows) w.append(row);
  w.close();
}

Table read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open '" + path + "'");
  Table t;
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError("empty table in '" + path + "'");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  t.columns = split(line, ',');
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != t.columns.size()) {
      throw ConfigError("ragged row in '" + path + "'");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_value(f));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open '" + path + "'");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const std::streamsize n = in.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
    if (!in) break;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(out);
}

namespace {

std::vector<std::string> grid_parts(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) {
    throw ArgumentError("grid must have the form a:b:c");
  }
  return parts;
}

double parse_grid_number(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ArgumentError("malformed grid number");
    return v;
  } catch (const std::exception&) {
    throw ArgumentError("malformed grid number '" + s + "'");
  }
}

}  // namespace

std::vector<double> parse_step_grid(const std::string& spec) {
  const auto parts = grid_parts(spec);
  const double a = parse_grid_number(parts[0]);
  const double b = parse_grid_number(parts[1]);
  const double step = parse_grid_number(parts[2]);
  if (!(step > 0.0)) throw ArgumentError("grid step must be positive");
  if (b < a) throw ArgumentError("grid end must not precede its start");
  std::vector<double> out;
  const int n = static_cast<int>(std::floor((b - a) / step + 1e-9));
  for (int i = 0; i <= n; ++i) out.push_back(a + step * i);
  return out;
}

std::vector<double> parse_count_grid(const std::string& spec) {
  const auto parts = grid_parts(spec);
  const double a = parse_grid_number(parts[0]);
  const double b = parse_grid_number(parts[1]);
  const double nn = parse_grid_number(parts[2]);
  const int n = static_cast<int>(nn);
  if (nn != n || n < 2) throw ArgumentError("grid count must be >= 2");
  if (b < a) throw ArgumentError("grid end must not precede its start");
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(a + (b - a) * static_cast<double>(i) / (n - 1));
  }
  return out;
}

}  // namespace tdesign
