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

#include "riqs/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "riqs/errors.hpp"

#ifndef RIQS_VERSION
#define RIQS_VERSION "0.0.0"
#endif

namespace riqs::cli {

using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ValidationError("unknown output format '" + name + "' (expected csv or json)");
}

const char* format_name(Format f) { return f == Format::csv ? "csv" : "json"; }

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw ValidationError("table row width differs from the header");
  rows.push_back(std::move(row));
}

Table table_from_series(const hilbert::TimeSeries& series, const std::string& time_label) {
  Table t;
  t.columns.push_back(time_label);
  for (const auto& l : series.labels()) t.columns.push_back(l);
  for (std::size_t r = 0; r < series.times().size(); ++r) {
    std::vector<double> row;
    row.reserve(t.columns.size());
    row.push_back(series.times()[r]);
    for (double v : series.records()[r]) row.push_back(v);
    t.add_row(std::move(row));
  }
  return t;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15e", x);
  return buf;
}

std::string render_table(const Table& t, Format f) {
  if (f == Format::csv) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) out += (c ? "," : "") + t.columns[c];
    out += '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += format_number(row[c]);
      }
      out += '\n';
    }
    return out;
  }
  ordered_json doc;
  doc["columns"] = t.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r = ordered_json::array();
    for (double v : row) r.push_back(std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

std::string render_manifest(const Manifest& m) {
  ordered_json doc;
  doc["command"] = m.command;
  doc["name"] = m.name;
  doc["version"] = version();
  doc["seed"] = m.seed;
  doc["format"] = m.format;
  doc["data_file"] = m.data_file;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : m.parameters) params[k] = v;
  doc["parameters"] = std::move(params);
  ordered_json summary = ordered_json::object();
  for (const auto& [k, v] : m.summary) summary[k] = std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
  doc["summary"] = std::move(summary);
  doc["wall_seconds"] = m.wall_seconds;
  return doc.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot open output file '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw ValidationError("failed writing output file '" + path + "'");
}

std::string manifest_path(const std::string& data_path) { return data_path + ".manifest.json"; }

const char* version() { return RIQS_VERSION; }

}  // namespace riqs::cli
