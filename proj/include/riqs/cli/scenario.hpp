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

// Config-file driven runs. A file has a [scenario] section naming the kind
// plus seed, format and an optional output path, and a section named after
// the kind holding its parameters:
//
//   [scenario]
//   kind = ghz
//   seed = 7
//   format = json
//   out = ghz.json
//
//   [ghz]
//   n_atoms = 4
//   twist = pi/2

#include <cstdint>
#include <string>
#include <vector>

#include "riqs/cli/config.hpp"
#include "riqs/cli/output.hpp"

namespace riqs::cli {

/// iontrap-gate, ghz, kicked-rotor, spin-wave, squeezing, monte-carlo.
std::vector<std::string> scenario_kinds();

/// Throws ValidationError for unknown kinds.
Params scenario_defaults(const std::string& kind);

struct Scenario {
  std::string kind;
  Params params;
  std::uint64_t seed = 1;
  Format format = Format::csv;
  std::string out;  // empty: not set in the file
};

/// Throws ConfigError (with line) for unknown sections, keys and kinds.
Scenario parse_scenario(const ConfigFile& file);
Scenario load_scenario(const std::string& path);

RunResult run_scenario(const Scenario& s);

}  // namespace riqs::cli
