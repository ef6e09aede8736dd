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

#include "riqs/cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "riqs/cli/figures.hpp"
#include "riqs/cli/scenario.hpp"
#include "riqs/errors.hpp"

namespace riqs::cli {
namespace {

struct Job {
  std::string command;
  std::string name;
  Params params;
  std::uint64_t seed = 1;
  Format format = Format::csv;
  std::string out;
};

void print_settings(std::ostream& os, const Job& job, const RunResult& r) {
  os << "# " << job.command << ' ' << job.name << "  riqs " << version() << '\n';
  for (const auto& [k, v] : job.params.resolved()) os << "# " << k << " = " << v << '\n';
  os << "# seed = " << job.seed << '\n';
  for (const auto& [k, v] : r.summary) os << "# " << k << " = " << format_number(v) << '\n';
}

// Fails before a long run rather than after it.
void check_writable(const std::string& path) {
  const auto dir = std::filesystem::absolute(path).parent_path();
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw ValidationError("cannot write " + path + ": no directory " + dir.string());
}

void emit(const Job& job, std::ostream& out, std::ostream& err) {
  if (!job.out.empty()) check_writable(job.out);
  const auto start = std::chrono::steady_clock::now();
  const RunResult r = job.command == "figure" ? run_figure(job.name, job.params, job.seed) : run_scenario([&] {
    Scenario s;
    s.kind = job.name;
    s.params = job.params;
    s.seed = job.seed;
    s.format = job.format;
    return s;
  }());
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string data = render_table(r.table, job.format);

  if (job.out.empty()) {
    out << data;
    print_settings(err, job, r);
    return;
  }
  Manifest m;
  m.command = job.command;
  m.name = job.name;
  m.parameters = job.params.resolved();
  m.seed = job.seed;
  m.format = format_name(job.format);
  m.data_file = job.out;
  m.summary = r.summary;
  m.wall_seconds = wall;
  write_file(job.out, data);
  write_file(manifest_path(job.out), render_manifest(m));
  print_settings(out, job, r);
  out << "# wrote " << job.out << " and " << manifest_path(job.out) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulations of ion-trap gates, collective spin dynamics and lattice spin models."};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  std::string figure, fig_out, fig_format = "csv";
  std::uint64_t seed = 1;
  std::vector<std::string> sets;
  CLI::App* fig = app.add_subcommand("figure", "reproduce a named figure dataset");
  fig->add_option("name", figure, "fig2a, fig2b, fig4, fig5a or fig5b")->required();
  fig->add_option("--out", fig_out, "data file (default: stdout)");
  fig->add_option("--format", fig_format, "csv or json");
  fig->add_option("--seed", seed, "RNG seed");
  fig->add_option("--set", sets, "override a parameter, key=value")->take_all()->expected(1)->allow_extra_args(false);

  std::string config, run_out;
  CLI::App* run = app.add_subcommand("run", "run a scenario config file");
  run->add_option("config", config, "scenario file")->required();
  run->add_option("--out", run_out, "data file (overrides the file's out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Job job;
    if (fig->parsed()) {
      job.command = "figure";
      job.name = figure;
      job.params = figure_defaults(figure);
      for (const auto& s : sets) job.params.set_assignment(s, "--set");
      job.seed = seed;
      job.format = parse_format(fig_format);
      job.out = fig_out;
    } else {
      Scenario s = load_scenario(config);
      job.command = "run";
      job.name = s.kind;
      job.params = s.params;
      job.seed = s.seed;
      job.format = s.format;
      job.out = run_out.empty() ? s.out : run_out;
    }
    emit(job, out, err);
    return 0;
  } catch (const ValidationError& e) {
    err << "riqs: error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    err << "riqs: numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "riqs: failure: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace riqs::cli
