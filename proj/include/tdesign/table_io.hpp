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

#ifndef TDESIGN_TABLE_IO_HPP_
#define TDESIGN_TABLE_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace tdesign {

// Locale-independent decimal rendering at 17 significant digits; parsing
// the result recovers the double exactly.
std::string format_value(double v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Comma-separated values, LF newlines, header row first. Throws
// ResourceError on I/O failure after removing the partial file.
void write_csv(const std::string& path, const Table& table);
Table read_csv(const std::string& path);

// Streaming variant used for long runs: rows are flushed as they are
// appended. abort_file() removes a partially written file.
class CsvWriter {
 public:
  CsvWriter(std::string path, const std::vector<std::string>& columns);
  ~CsvWriter();
  void append(const std::vector<double>& row);
  void close();
  void abort_file();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::size_t n_columns_;
  void* stream_;  // FILE*
  bool closed_ = false;
};

// FNV-1a 64-bit digest of a file's bytes, rendered as fixed-width hex.
std::string file_digest(const std::string& path);

// "a:b:step": inclusive arithmetic grid; step > 0, b >= a.
std::vector<double> parse_step_grid(const std::string& spec);

// "a:b:n": n >= 2 evenly spaced points from a to b inclusive.
std::vector<double> parse_count_grid(const std::string& spec);

}  // namespace tdesign

#endif  // TDESIGN_TABLE_IO_HPP_
