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

#include "riqs/cli/scenario.hpp"

#include "runners.hpp"

namespace riqs::cli {

std::vector<std::string> scenario_kinds() {
  return {"iontrap-gate", "ghz", "kicked-rotor", "spin-wave", "squeezing", "monte-carlo"};
}

Params scenario_defaults(const std::string& kind) {
  Params p;
  if (kind == "iontrap-gate") {
    detail::declare_gate(p, iontrap::fast_gate_params(), 500.0, 501);
  } else if (kind == "ghz") {
    detail::declare_ghz(p);
  } else if (kind == "kicked-rotor") {
    detail::declare_kicked_rotor(p);
  } else if (kind == "spin-wave") {
    detail::declare_spin_wave(p);
  } else if (kind == "squeezing") {
    detail::declare_squeezing(p);
  } else if (kind == "monte-carlo") {
    detail::declare_monte_carlo(p);
  } else {
    std::string known;
    for (const auto& k : scenario_kinds()) known += (known.empty() ? "" : ", ") + k;
    throw ValidationError("unknown scenario kind '" + kind + "' (known: " + known + ")");
  }
  return p;
}

Scenario parse_scenario(const ConfigFile& file) {
  const ConfigSection* head = file.find("scenario");
  if (head == nullptr) throw ConfigError(file.source(), 1, "missing [scenario] section");

  Scenario s;
  const ConfigEntry* kind = nullptr;
  for (const auto& e : head->entries)
    if (e.key == "kind") kind = &e;
  if (kind == nullptr) throw ConfigError(file.source(), head->line, "[scenario] needs a kind");
  try {
    s.params = scenario_defaults(kind->value);
  } catch (const ValidationError& e) {
    throw ConfigError(file.source(), kind->line, e.what());
  }
  s.kind = kind->value;

  Params head_params;
  head_params.declare("kind", s.kind);
  head_params.declare("seed", "1");
  head_params.declare("format", "csv");
  head_params.declare("out", "");
  for (const auto& e : head->entries) {
    if (!head_params.has(e.key))
      throw ConfigError(file.source(), e.line, "unknown key '" + e.key + "' in [scenario] (known: kind, seed, format, out)");
    head_params.set(e.key, e.value, file.source() + ":" + std::to_string(e.line));
    if (e.key == "format") {
      try {
        s.format = parse_format(e.value);
      } catch (const ValidationError& ex) {
        throw ConfigError(file.source(), e.line, ex.what());
      }
    }
  }
  s.seed = head_params.unsigned_integer("seed");
  s.out = head_params.text("out");

  for (const auto& sec : file.sections()) {
    if (sec.name == "scenario") continue;
    if (sec.name != s.kind)
      throw ConfigError(file.source(), sec.line,
                        "section [" + sec.name + "] does not match scenario kind '" + s.kind + "'");
    for (const auto& e : sec.entries) {
      if (!s.params.has(e.key)) {
        std::string known;
        for (const auto& [k, v] : s.params.resolved()) known += (known.empty() ? "" : ", ") + k;
        throw ConfigError(file.source(), e.line, "unknown parameter '" + e.key + "' (known: " + known + ")");
      }
      s.params.set(e.key, e.value, file.source() + ":" + std::to_string(e.line));
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) { return parse_scenario(ConfigFile::load(path)); }

RunResult run_scenario(const Scenario& s) {
  const Params& p = s.params;
  if (s.kind == "iontrap-gate") return detail::run_gate(p);
  if (s.kind == "ghz") return detail::run_ghz(p);
  if (s.kind == "kicked-rotor") return detail::run_kicked_rotor(p);
  if (s.kind == "spin-wave") return detail::run_spin_wave(p);
  if (s.kind == "squeezing") return detail::run_squeezing(p, s.seed);
  if (s.kind == "monte-carlo") return detail::run_monte_carlo(p, s.seed);
  scenario_defaults(s.kind);  // throws
  return {};
}

}  // namespace riqs::cli
