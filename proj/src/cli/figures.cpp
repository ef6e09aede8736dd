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

#include "riqs/cli/figures.hpp"

#include "runners.hpp"

namespace riqs::cli {

std::vector<std::string> figure_names() { return {"fig2a", "fig2b", "fig4", "fig5a", "fig5b"}; }

Params figure_defaults(const std::string& name) {
  Params p;
  if (name == "fig2a") {
    // slow gate: |A| reaches pi/2 near nu t = 1571
    detail::declare_gate(p, iontrap::slow_gate_params(), 1600.0, 801);
  } else if (name == "fig2b") {
    detail::declare_gate(p, iontrap::fast_gate_params(), 500.0, 501);
  } else if (name == "fig4") {
    detail::declare_spin_wave(p);
  } else if (name == "fig5a") {
    detail::declare_visit_curves(p);
  } else if (name == "fig5b") {
    detail::declare_filling_table(p);
  } else {
    std::string known;
    for (const auto& n : figure_names()) known += (known.empty() ? "" : ", ") + n;
    throw ValidationError("unknown figure '" + name + "' (known: " + known + ")");
  }
  return p;
}

RunResult run_figure(const std::string& name, const Params& params, std::uint64_t seed) {
  if (name == "fig2a" || name == "fig2b") return detail::run_gate(params);
  if (name == "fig4") return detail::run_spin_wave(params);
  if (name == "fig5a") return detail::run_visit_curves(params);
  if (name == "fig5b") return detail::run_filling_table(params, seed);
  figure_defaults(name);  // throws
  return {};
}

}  // namespace riqs::cli
