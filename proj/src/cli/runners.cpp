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

#include "runners.hpp"

#include <cmath>
#include <charconv>
#include <numbers>
#include <string>

#include "riqs/dicke.hpp"
#include "riqs/errors.hpp"
#include "riqs/lattice.hpp"
#include "riqs/squeeze.hpp"

namespace riqs::cli::detail {
namespace {

std::string num(double x) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

lattice::Boundary boundary_of(const Params& p) {
  return p.choice("boundary", {"open", "periodic"}) == "open" ? lattice::Boundary::open : lattice::Boundary::periodic;
}

lattice::DisplacementScheme scheme_of(const Params& p) {
  return p.choice("scheme", {"symmetric", "forward"}) == "symmetric" ? lattice::DisplacementScheme::symmetric
                                                                       : lattice::DisplacementScheme::forward;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

// Ion-trap gate -------------------------------------------------------------

void declare_gate(Params& p, const iontrap::IonTrapParams& d, double t_stop, int t_points) {
  p.declare("nu", num(d.nu));
  p.declare("delta", num(d.delta));
  p.declare("eta", num(d.eta));
  p.declare("omega", num(d.omega));
  p.declare("n_ions", std::to_string(d.n_ions));
  p.declare("n_max", std::to_string(d.n_max));
  p.declare("fock_level", "0");
  p.declare("engine", "full");
  p.declare("tolerance", num(hilbert::kDefaultOdeTolerance));
  declare_time_grid(p, 0.0, t_stop, t_points);
}

RunResult run_gate(const Params& p) {
  iontrap::IonTrapParams ip;
  ip.nu = p.real("nu");
  ip.delta = p.real("delta");
  ip.eta = p.real("eta");
  ip.omega = p.real("omega");
  ip.n_ions = p.integer("n_ions");
  ip.n_max = p.integer("n_max");
  ip.validate();
  const int level = p.integer("fock_level");
  const auto engine = p.choice("engine", {"full", "effective"}) == "full" ? iontrap::Engine::full
                                                                          : iontrap::Engine::effective;
  const double tol = p.real("tolerance");
  require(tol > 0.0, "tolerance must be positive");
  const auto grid = time_grid(p);
  const auto psi0 = iontrap::ground_state(ip, level);

  const auto trace = iontrap::gate_trace(ip, psi0, grid, engine, tol);
  RunResult out;
  out.table = table_from_series(trace, "nu_t");
  // overlap with (|g..g> - i|e..e>)/sqrt2
  std::size_t best = 0;
  double best_f = -1.0;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const double f = 0.5 * (trace.at(r, "rho_gg_gg") + trace.at(r, "rho_ee_ee")) + trace.at(r, "im_rho_gg_ee");
    if (f > best_f) best_f = f, best = r;
  }
  out.summary = {{"t_best", grid[best]},
                 {"target_fidelity_best", best_f},
                 {"rho_gg_gg_best", trace.at(best, "rho_gg_gg")},
                 {"rho_ee_ee_best", trace.at(best, "rho_ee_ee")}};
  return out;
}

// GHZ ----------------------------------------------------------------------

void declare_ghz(Params& p) {
  p.declare("n_atoms", "4");
  p.declare("twist", "recipe");
  p.declare("rotation_y", "recipe");
}

RunResult run_ghz(const Params& p) {
  const int n = p.integer("n_atoms");
  require(n >= 1, "n_atoms must be >= 1");
  const dicke::GhzRecipe recipe = dicke::ghz_recipe(n);
  const double twist = p.text("twist") == "recipe" ? recipe.twist : p.real("twist");
  const double rot = p.text("rotation_y") == "recipe" ? recipe.rotation_y : p.real("rotation_y");

  dicke::DickeState s = dicke::one_axis_twist(dicke::DickeState::ground(n), twist);
  if (rot != 0.0) s = dicke::rotate(s, dicke::Collective::y, rot);
  const dicke::GhzOverlap g = dicke::ghz_fidelity(s);
  RunResult out;
  out.table.columns = {"n_atoms", "twist", "rotation_y", "ghz_fidelity", "phase_g", "phase_e"};
  out.table.add_row({static_cast<double>(n), twist, rot, g.fidelity, g.phase_g, g.phase_e});
  out.summary = {{"ghz_fidelity", g.fidelity}};
  return out;
}

// Kicked rotor ---------------------------------------------------------------

void declare_kicked_rotor(Params& p) {
  p.declare("n_atoms", "20");
  p.declare("kick", "3");
  p.declare("rotation", "pi/2");
  p.declare("steps", "100");
}

RunResult run_kicked_rotor(const Params& p) {
  const int n = p.integer("n_atoms");
  const double kick = p.real("kick");
  const double rotation = p.real("rotation");
  const int steps = p.integer("steps");
  require(n >= 1, "n_atoms must be >= 1");
  require(steps >= 0, "steps must be >= 0");

  RunResult out;
  out.table.columns = {"step", "jx", "jy", "jz", "norm_error"};
  dicke::DickeState s = dicke::DickeState::ground(n);
  double worst = 0.0;
  for (int k = 0;; ++k) {
    const Eigen::Vector3d m = dicke::mean_spin(s);
    const double err = std::abs(s.amps().norm() - 1.0);
    worst = std::max(worst, err);
    if (err > 1e-9) throw NumericalError("kicked rotor norm drifted by " + num(err) + " at step " + std::to_string(k));
    out.table.add_row({static_cast<double>(k), m.x(), m.y(), m.z(), err});
    if (k == steps) break;
    s = dicke::kicked_rotor_step(s, kick, rotation);
  }
  out.summary = {{"max_norm_error", worst}};
  return out;
}

// Spin wave ----------------------------------------------------------------

void declare_spin_wave(Params& p) {
  p.declare("n_atoms", "15");
  p.declare("flip_index", "center");
  p.declare("chi", "1");
  p.declare("eta_c", "1");
  p.declare("lambda_c", "1");
  p.declare("boundary", "open");
  p.declare("scheme", "symmetric");
  p.declare("steps_per_interval", "10");
  declare_time_grid(p, 0.0, 4.0, 41);
}

RunResult run_spin_wave(const Params& p) {
  lattice::SpinWaveSetup s;
  s.n_atoms = p.integer("n_atoms");
  require(s.n_atoms >= 1, "n_atoms must be >= 1");
  s.flip_index = p.text("flip_index") == "center" ? (s.n_atoms - 1) / 2 : p.integer("flip_index");
  s.couplings = {p.real("chi"), p.real("eta_c"), p.real("lambda_c")};
  s.boundary = boundary_of(p);
  s.scheme = scheme_of(p);
  s.steps_per_interval = p.integer("steps_per_interval");
  require(s.steps_per_interval >= 1, "steps_per_interval must be >= 1");
  require(s.flip_index >= 0 && s.flip_index < s.n_atoms, "flip_index outside the chain");
  const auto grid = time_grid(p);

  const auto wave = lattice::spin_wave_sim(s, grid);
  RunResult out;
  out.table = table_from_series(wave, "t");
  double asym = 0.0;
  double drift = 0.0;
  const double start = 1.0 - 0.5 * s.n_atoms;  // one atom up
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const auto& rec = wave.records()[r];
    double total = 0.0;
    for (std::size_t k = 0; k < rec.size(); ++k) {
      total += rec[k];
      asym = std::max(asym, std::abs(rec[k] - rec[rec.size() - 1 - k]));
    }
    drift = std::max(drift, std::abs(total - start));
  }
  out.summary = {{"max_mirror_asymmetry", asym}, {"max_total_jz_drift", drift}};
  return out;
}

// Squeezing ------------------------------------------------------------------

void declare_squeezing(Params& p) {
  p.declare("n_atoms", "15");
  p.declare("filling", "1");
  p.declare("n_neighbors", "1");
  p.declare("boundary", "open");
  p.declare("chi", "1");
  p.declare("theta_tol", "1e-6");
  declare_time_grid(p, 0.0, 1.5, 61);
}

RunResult run_squeezing(const Params& p, std::uint64_t seed) {
  const int n = p.integer("n_atoms");
  const double filling = p.real("filling");
  const int nb = p.integer("n_neighbors");
  const double chi = p.real("chi");
  squeeze::MinimizeOptions opts;
  opts.theta_tol = p.real("theta_tol");
  require(opts.theta_tol > 0.0, "theta_tol must be positive");
  const auto grid = time_grid(p);
  lattice::LatticeConfig cfg = lattice::sample_occupations(filling, n, seed);
  cfg.boundary = boundary_of(p);
  cfg.validate();
  const auto map = squeeze::neighbor_coupling_map(cfg, nb, cfg.boundary, chi);

  const squeeze::SqueezingResult r = squeeze::minimize_xi(cfg, map, grid, opts);
  RunResult out;
  out.table = table_from_series(r.variance_curve, "chi_t");
  out.summary = {{"n_sites", static_cast<double>(cfg.n_sites)},
                 {"t_opt", r.t_opt},
                 {"theta_opt", r.theta_opt},
                 {"xi2_min", r.xi2_min},
                 {"jz_at_t_opt", r.mean_spin.z()}};
  return out;
}

// Monte Carlo ------------------------------------------------------------------

void declare_monte_carlo(Params& p) {
  p.declare("filling", "0.5");
  p.declare("n_neighbors", "1");
  p.declare("n_atoms", "15");
  p.declare("trials", "200");
  p.declare("boundary", "open");
  p.declare("threads", "0");
  p.declare("theta_tol", "1e-6");
  declare_time_grid(p, 0.0, 1.5, 61);
}

namespace {

squeeze::MonteCarloOptions mc_options(const Params& p) {
  squeeze::MonteCarloOptions o;
  o.times = time_grid(p);
  o.boundary = boundary_of(p);
  const int threads = p.integer("threads");
  require(threads >= 0, "threads must be >= 0");
  o.threads = static_cast<unsigned>(threads);
  o.minimize.theta_tol = p.real("theta_tol");
  require(o.minimize.theta_tol > 0.0, "theta_tol must be positive");
  return o;
}

}  // namespace

RunResult run_monte_carlo(const Params& p, std::uint64_t seed) {
  const double filling = p.real("filling");
  const int nb = p.integer("n_neighbors");
  const int n = p.integer("n_atoms");
  const int trials = p.integer("trials");
  require(filling > 0.0 && filling <= 1.0, "filling must be in (0, 1]");
  require(nb >= 1, "n_neighbors must be >= 1");
  require(n >= 1 && n <= 24, "n_atoms must be in [1, 24]");
  require(trials >= 1, "trials must be >= 1");
  const auto opts = mc_options(p);

  const auto mc = squeeze::monte_carlo_xi(filling, nb, n, trials, seed, opts);
  RunResult out;
  // Trial seeds follow from the run seed and the trial index.
  out.table.columns = {"trial", "n_sites", "xi2_min", "t_opt", "theta_opt"};
  for (std::size_t i = 0; i < mc.trials.size(); ++i) {
    const auto& t = mc.trials[i];
    out.table.add_row({static_cast<double>(i), static_cast<double>(t.n_sites), t.xi2_min, t.t_opt, t.theta_opt});
  }
  out.summary = {{"mean_xi2_min", mc.mean_xi2}, {"std_error", mc.std_error}};
  return out;
}

// Visit-range curves -----------------------------------------------------------

void declare_visit_curves(Params& p) {
  p.declare("n_atoms", "15");
  p.declare("neighbors", "1,2,3");
  p.declare("boundary", "open");
  p.declare("chi", "1");
  p.declare("theta_tol", "1e-6");
  declare_time_grid(p, 0.0, 1.5, 151);
}

RunResult run_visit_curves(const Params& p) {
  const int n = p.integer("n_atoms");
  const auto neighbors = p.integers("neighbors");
  const double chi = p.real("chi");
  squeeze::MinimizeOptions opts;
  opts.theta_tol = p.real("theta_tol");
  require(opts.theta_tol > 0.0, "theta_tol must be positive");
  require(!neighbors.empty(), "neighbors list is empty");
  const auto grid = time_grid(p);
  lattice::LatticeConfig cfg = lattice::LatticeConfig::filled(n, boundary_of(p));
  cfg.validate();
  std::vector<squeeze::CouplingMap> maps;
  for (int nb : neighbors) maps.push_back(squeeze::neighbor_coupling_map(cfg, nb, cfg.boundary, chi));

  RunResult out;
  out.table.columns = {"chi_t"};
  for (int nb : neighbors) out.table.columns.push_back("variance_min_n" + std::to_string(nb));
  for (int nb : neighbors) out.table.columns.push_back("xi2_n" + std::to_string(nb));
  std::vector<squeeze::SqueezingResult> results;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    results.push_back(squeeze::minimize_xi(cfg, maps[i], grid, opts));
    const std::string tag = "_n" + std::to_string(neighbors[i]);
    out.summary.emplace_back("xi2_min" + tag, results.back().xi2_min);
    out.summary.emplace_back("t_opt" + tag, results.back().t_opt);
  }
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::vector<double> row = {grid[r]};
    for (const auto& res : results) row.push_back(res.variance_curve.at(r, "variance_min"));
    for (const auto& res : results) row.push_back(res.variance_curve.at(r, "xi2"));
    out.table.add_row(std::move(row));
  }
  return out;
}

// Filling table ---------------------------------------------------------------

void declare_filling_table(Params& p) {
  p.declare("fillings", "1,0.5,0.25,0.1");
  p.declare("neighbors", "1,2,3");
  p.declare("n_atoms", "15");
  p.declare("trials", "200");
  p.declare("boundary", "open");
  p.declare("threads", "0");
  p.declare("theta_tol", "1e-6");
  declare_time_grid(p, 0.0, 1.5, 61);
}

RunResult run_filling_table(const Params& p, std::uint64_t seed) {
  const auto fillings = p.reals("fillings");
  const auto neighbors = p.integers("neighbors");
  const int n = p.integer("n_atoms");
  const int trials = p.integer("trials");
  require(!fillings.empty() && !neighbors.empty(), "fillings and neighbors must be non-empty");
  for (double f : fillings) require(f > 0.0 && f <= 1.0, "every filling must be in (0, 1]");
  for (int nb : neighbors) require(nb >= 1, "every neighbors entry must be >= 1");
  require(n >= 1 && n <= 24, "n_atoms must be in [1, 24]");
  require(trials >= 1, "trials must be >= 1");
  const auto opts = mc_options(p);

  RunResult out;
  out.table.columns = {"p", "n_visited", "mean_xi2_min", "stderr"};
  for (double f : fillings) {
    for (int nb : neighbors) {
      const auto mc = squeeze::monte_carlo_xi(f, nb, n, trials, seed, opts);
      out.table.add_row({f, static_cast<double>(nb), mc.mean_xi2, mc.std_error});
    }
  }
  return out;
}

}  // namespace riqs::cli::detail
