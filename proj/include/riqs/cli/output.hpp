// Copyright 2026 The RIQS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Tabular run output (CSV or JSON) and the run manifest.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "riqs/hilbert.hpp"

namespace riqs::cli {

enum class Format { csv, json };

/// "csv" or "json"; anything else is a ValidationError.
Format parse_format(const std::string& name);
const char* format_name(Format f);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Throws ValidationError if the row width differs from the header.
  void add_row(std::vector<double> row);
};

/// Data table plus scalar results recorded in the manifest.
struct RunResult {
  Table table;
  std::vector<std::pair<std::string, double>> summary;
};

/// First column `time_label`, then the series labels.
Table table_from_series(const hilbert::TimeSeries& series, const std::string& time_label);

/// "%.15e"; NaN and infinities as "nan", "inf", "-inf".
std::string format_number(double x);

/// CSV: header line then one line per row, '\n' endings. JSON:
/// {"columns": [...], "rows": [[...], ...]}, non-finite values as null.
std::string render_table(const Table& t, Format f);

struct Manifest {
  std::string command;  // "figure" or "run"
  std::string name;     // figure name or scenario kind
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::string format;
  std::string data_file;
  std::vector<std::pair<std::string, double>> summary;
  double wall_seconds = 0.0;
};

std::string render_manifest(const Manifest& m);

/// Writes the whole string; throws ValidationError if the path cannot be
/// opened or written.
void write_file(const std::string& path, const std::string& content);

/// `data_path` with ".manifest.json" appended.
std::string manifest_path(const std::string& data_path);

const char* version();

}  // namespace riqs::cli
