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

// Scenario files and resolved run parameters.
//
// A scenario file is line-oriented text:
//
//   # comment (also ';')
//   [section]
//   key = value
//
// Keys and section names are case-sensitive; whitespace around keys and
// values is trimmed. Every entry remembers its line for diagnostics.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riqs/errors.hpp"

namespace riqs::cli {

/// A malformed or inconsistent input, located as "source:line: message".
class ConfigError : public ValidationError {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct ConfigSection {
  std::string name;
  int line = 0;
  std::vector<ConfigEntry> entries;
};

class ConfigFile {
 public:
  /// Throws ConfigError on syntax errors, duplicate sections or keys, and
  /// entries outside any section.
  static ConfigFile parse(const std::string& text, const std::string& source);
  static ConfigFile load(const std::string& path);

  const std::string& source() const { return source_; }
  const std::vector<ConfigSection>& sections() const { return sections_; }
  const ConfigSection* find(const std::string& name) const;

  /// Back to text; parse(render()) reproduces the same sections.
  std::string render() const;

 private:
  std::string source_;
  std::vector<ConfigSection> sections_;
};

/// Named run parameters with string defaults. Values are validated by the
/// typed getters; where a value came from is kept so errors can point at it.
class Params {
 public:
  void declare(const std::string& key, const std::string& default_value);
  bool has(const std::string& key) const { return values_.count(key) != 0; }

  /// Throws ValidationError for undeclared keys.
  void set(const std::string& key, const std::string& value, const std::string& origin);
  /// Accepts "key=value".
  void set_assignment(const std::string& assignment, const std::string& origin);

  std::string text(const std::string& key) const;
  double real(const std::string& key) const;
  int integer(const std::string& key) const;
  std::uint64_t unsigned_integer(const std::string& key) const;
  /// Comma-separated reals; empty string gives an empty list.
  std::vector<double> reals(const std::string& key) const;
  std::vector<int> integers(const std::string& key) const;
  /// One of `choices`.
  std::string choice(const std::string& key, const std::vector<std::string>& choices) const;

  /// Keys in declaration order with their current values.
  std::vector<std::pair<std::string, std::string>> resolved() const;

 private:
  struct Value {
    std::string text;
    std::string origin;  // "default", "--set", or "file:line"
  };
  [[noreturn]] void fail(const std::string& key, const std::string& why) const;

  std::vector<std::string> order_;
  std::map<std::string, Value> values_;
};

/// Time grid from t_start/t_stop/t_points, or from an explicit `times` list
/// when that is non-empty. Throws ValidationError on an empty grid.
void declare_time_grid(Params& p, double start, double stop, int points);
std::vector<double> time_grid(const Params& p);

}  // namespace riqs::cli
