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

// Parameter declarations and runners shared by figure subcommands and
// scenario files. Each declare_* fills in defaults; the matching run_*
// validates every parameter before computing anything.

#include <cstdint>

#include "riqs/cli/config.hpp"
#include "riqs/cli/output.hpp"
#include "riqs/iontrap.hpp"

namespace riqs::cli::detail {

void declare_gate(Params& p, const iontrap::IonTrapParams& defaults, double t_stop, int t_points);
RunResult run_gate(const Params& p);

void declare_ghz(Params& p);
RunResult run_ghz(const Params& p);

void declare_kicked_rotor(Params& p);
RunResult run_kicked_rotor(const Params& p);

void declare_spin_wave(Params& p);
RunResult run_spin_wave(const Params& p);

void declare_squeezing(Params& p);
RunResult run_squeezing(const Params& p, std::uint64_t seed);

void declare_monte_carlo(Params& p);
RunResult run_monte_carlo(const Params& p, std::uint64_t seed);

/// Theta-minimized variance and xi^2 against chi t for several visit ranges.
void declare_visit_curves(Params& p);
RunResult run_visit_curves(const Params& p);

/// Mean minimal xi^2 per (filling, visited neighbours).
void declare_filling_table(Params& p);
RunResult run_filling_table(const Params& p, std::uint64_t seed);

}  // namespace riqs::cli::detail
