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

// Named reproduction runs with fixed default parameters.

#include <cstdint>
#include <string>
#include <vector>

#include "riqs/cli/config.hpp"
#include "riqs/cli/output.hpp"

namespace riqs::cli {

/// fig2a, fig2b, fig4, fig5a, fig5b.
std::vector<std::string> figure_names();

/// Throws ValidationError for unknown names.
Params figure_defaults(const std::string& name);

/// Row per grid time (per (p, neighbors) pair for fig5b).
RunResult run_figure(const std::string& name, const Params& params, std::uint64_t seed);

}  // namespace riqs::cli
