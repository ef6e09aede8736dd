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

#include "riqs/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

namespace riqs::cli {
namespace {

std::string trim(const std::string& s) {
  auto begin = s.begin();
  auto end = s.end();
  while (begin != end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  while (end != begin && std::isspace(static_cast<unsigned char>(*(end - 1)))) --end;
  return {begin, end};
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

// Plain reals plus multiples of pi: "pi", "-pi/2", "3*pi/4", "0.5*pi".
bool parse_real(const std::string& s, double& out) {
  if (parse_number(s, out)) return true;
  const auto at = s.find("pi");
  if (at == std::string::npos) return false;
  double scale = 1.0;
  std::string head = s.substr(0, at);
  if (head == "-") {
    scale = -1.0;
  } else if (!head.empty()) {
    if (head.back() != '*') return false;
    head.pop_back();
    if (!parse_number(head, scale)) return false;
  }
  double divisor = 1.0;
  const std::string tail = s.substr(at + 2);
  if (!tail.empty()) {
    if (tail.front() != '/' || !parse_number(tail.substr(1), divisor) || divisor == 0.0) return false;
  }
  out = scale * std::numbers::pi / divisor;
  return true;
}

std::string origin_of(const std::string& source, int line) { return source + ":" + std::to_string(line); }

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : ValidationError(origin_of(source, line) + ": " + message), line_(line) {}

ConfigFile ConfigFile::parse(const std::string& text, const std::string& source) {
  ConfigFile file;
  file.source_ = source;
  std::set<std::string> section_names;
  std::set<std::string> keys;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string s = trim(raw);
    if (s.empty() || s.front() == '#' || s.front() == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError(source, line, "section header missing ']'");
      const std::string name = trim(s.substr(1, s.size() - 2));
      if (!valid_name(name)) throw ConfigError(source, line, "invalid section name '" + name + "'");
      if (!section_names.insert(name).second) throw ConfigError(source, line, "duplicate section [" + name + "]");
      file.sections_.push_back({name, line, {}});
      keys.clear();
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(source, line, "expected 'key = value'");
    if (file.sections_.empty()) throw ConfigError(source, line, "entry before any [section]");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (!valid_name(key)) throw ConfigError(source, line, "invalid key '" + key + "'");
    if (!keys.insert(key).second) {
      throw ConfigError(source, line, "duplicate key '" + key + "' in [" + file.sections_.back().name + "]");
    }
    file.sections_.back().entries.push_back({key, value, line});
  }
  return file;
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path);
}

const ConfigSection* ConfigFile::find(const std::string& name) const {
  for (const auto& s : sections_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::string ConfigFile::render() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < sections_.size(); ++i) {
    if (i) out << '\n';
    out << '[' << sections_[i].name << "]\n";
    for (const auto& e : sections_[i].entries) out << e.key << " = " << e.value << '\n';
  }
  return out.str();
}

// Params ------------------------------------------------------------------

void Params::declare(const std::string& key, const std::string& default_value) {
  if (!values_.count(key)) order_.push_back(key);
  values_[key] = {default_value, "default"};
}

void Params::set(const std::string& key, const std::string& value, const std::string& origin) {
  const auto it = values_.find(key);
  if (it == values_.end()) {
    std::string known;
    for (const auto& k : order_) known += (known.empty() ? "" : ", ") + k;
    throw ValidationError(origin + ": unknown parameter '" + key + "' (known: " + known + ")");
  }
  it->second = {value, origin};
}

void Params::set_assignment(const std::string& assignment, const std::string& origin) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ValidationError(origin + ": expected key=value, got '" + assignment + "'");
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)), origin);
}

void Params::fail(const std::string& key, const std::string& why) const {
  const auto it = values_.find(key);
  const std::string where = it == values_.end() ? std::string("parameter") : it->second.origin;
  throw ValidationError(where + ": " + key + ": " + why);
}

std::string Params::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw std::logic_error("undeclared parameter " + key);
  return it->second.text;
}

double Params::real(const std::string& key) const {
  double v = 0.0;
  if (!parse_real(text(key), v) || !std::isfinite(v)) fail(key, "expected a finite real, got '" + text(key) + "'");
  return v;
}

int Params::integer(const std::string& key) const {
  int v = 0;
  if (!parse_number(text(key), v)) fail(key, "expected an integer, got '" + text(key) + "'");
  return v;
}

std::uint64_t Params::unsigned_integer(const std::string& key) const {
  std::uint64_t v = 0;
  if (!parse_number(text(key), v)) fail(key, "expected a non-negative integer, got '" + text(key) + "'");
  return v;
}

std::vector<double> Params::reals(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_list(text(key))) {
    double v = 0.0;
    if (!parse_real(item, v) || !std::isfinite(v)) fail(key, "expected a list of reals, bad entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<int> Params::integers(const std::string& key) const {
  std::vector<int> out;
  for (const auto& item : split_list(text(key))) {
    int v = 0;
    if (!parse_number(item, v)) fail(key, "expected a list of integers, bad entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string Params::choice(const std::string& key, const std::vector<std::string>& choices) const {
  const std::string v = text(key);
  if (std::find(choices.begin(), choices.end(), v) != choices.end()) return v;
  std::string list;
  for (const auto& c : choices) list += (list.empty() ? "" : "|") + c;
  fail(key, "expected one of " + list + ", got '" + v + "'");
}

std::vector<std::pair<std::string, std::string>> Params::resolved() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : order_) out.emplace_back(k, values_.at(k).text);
  return out;
}

// Time grids --------------------------------------------------------------

void declare_time_grid(Params& p, double start, double stop, int points) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", start);
  p.declare("t_start", buf);
  std::snprintf(buf, sizeof buf, "%.17g", stop);
  p.declare("t_stop", buf);
  p.declare("t_points", std::to_string(points));
  p.declare("times", "");
}

std::vector<double> time_grid(const Params& p) {
  std::vector<double> grid = p.reals("times");
  if (grid.empty()) {
    const int n = p.integer("t_points");
    const double a = p.real("t_start");
    const double b = p.real("t_stop");
    if (n < 1) throw ValidationError("time grid is empty (t_points = " + std::to_string(n) + ")");
    if (n > 1 && !(b > a)) throw ValidationError("time grid needs t_stop > t_start");
    grid.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) grid.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  }
  if (grid.front() < 0.0) throw ValidationError("time grid must start at t >= 0");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ValidationError("time grid must be strictly increasing");
  }
  return grid;
}

}  // namespace riqs::cli
