// Copyright 2026 The sscopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance runner: one PASS/FAIL line per criterion. With no arguments
// every criterion runs; otherwise only the numbered ones. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../instance_supports.hpp"
#include "../oracles.hpp"
#include "../test_instances.hpp"
#include "sscopt/grid/augmecon.hpp"
#include "sscopt/heur/mathfix.hpp"
#include "sscopt/heur/mathlagr.hpp"
#include "sscopt/instgen/generator.hpp"
#include "sscopt/metrics/metrics.hpp"

namespace sscopt {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool rel_le(double a, double b, double tol) { return a <= b + tol * std::max(1.0, std::abs(b)); }

instgen::GenConfig desk_config(std::uint64_t seed) {
  instgen::GenConfig cfg = instgen::load_config(SSCOPT_SOURCE_DIR "/config/desk.cfg");
  cfg.seed = seed;
  return cfg;
}

milp::MilpOptions exact_options(double rel_gap, double time_limit = milp::kInf) {
  milp::MilpOptions o;
  o.rel_gap = rel_gap;
  o.time_limit_s = time_limit;
  return o;
}

// Branch and bound against enumeration of every integer assignment.
Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7001);
  std::uniform_int_distribution<int> n_cont(1, 4), n_rows(2, 6);
  int models = 0, infeasible = 0, worst_discrete = 0;
  double worst = 0.0;
  std::string fail;
  while (models < 20) {
    const int ni = 4 + models % 9;  // 4 through 12 discrete variables
    auto [m, obj] = testing::random_milp(rng, ni, n_cont(rng), n_rows(rng));
    double assignments = 1.0;
    for (std::size_t j = 0; j < m.num_vars(); ++j) {
      const milp::VarSpec& v = m.var(static_cast<int>(j));
      if (v.is_integral()) assignments *= v.upper - v.lower + 1.0;
    }
    if (assignments > (1 << 17)) continue;  // keeps enumeration within the time budget
    ++models;
    worst_discrete = std::max(worst_discrete, ni);
    const std::optional<double> expect = testing::enumeration_milp(m, obj);
    const milp::MilpResult got = milp::solve_milp(m, obj, exact_options(1e-9));
    if (!expect) {
      ++infeasible;
      if (got.status != milp::MilpStatus::kInfeasible) fail = fmt("model %d: oracle infeasible, solver %s", models, milp::to_string(got.status));
      continue;
    }
    if (got.status != milp::MilpStatus::kOptimal) {
      fail = fmt("model %d: solver %s", models, milp::to_string(got.status));
      continue;
    }
    const double rel = std::abs(got.objective - *expect) / std::max(1.0, std::abs(*expect));
    worst = std::max(worst, rel);
    if (rel > 1e-6) fail = fmt("model %d: %.9g vs %.9g", models, got.objective, *expect);
  }
  const double t = seconds_since(t0);
  if (t >= 120.0) fail = fmt("took %.1fs", t);
  return {fail.empty(), fmt("20 models, <=%d discrete vars, %d infeasible, worst rel diff %.2e, %.1fs%s%s", worst_discrete,
                            infeasible, worst, t, fail.empty() ? "" : "; ", fail.c_str())};
}

// Every Lagrangian iteration brackets the optimum.
Outcome weak_duality() {
  const auto t0 = Clock::now();
  int checked = 0;
  std::string fail;
  for (int seed = 1; seed <= 20; ++seed) {
    const grid::BaseModel base = grid::BaseModel::from_instance(instgen::generate(testing::tiny_config(seed, 2)));
    for (int k = 0; k < 3; ++k) {
      const grid::MonoProblem p = grid::payoff_problem(base, k);
      const milp::MilpResult ex = milp::solve_milp(p.model, p.objective, exact_options(1e-9));
      if (ex.status != milp::MilpStatus::kOptimal) {
        fail = fmt("seed %d obj %d: exact %s", seed, k, milp::to_string(ex.status));
        continue;
      }
      const heur::LagrRun run = heur::MathLagr().run(p);
      for (const heur::LagrIteration& it : run.iterations) {
        ++checked;
        const bool ok = rel_le(it.l_val, ex.objective, 1e-6) && rel_le(it.lb, ex.objective, 1e-6) &&
                        rel_le(ex.objective, it.ub, 1e-6);
        if (!ok) {
          fail = fmt("seed %d obj %d k %d: L %.9g LB %.9g opt %.9g UB %.9g", seed, k, it.k, it.l_val, it.lb,
                     ex.objective, it.ub);
        }
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 300.0) fail = fmt("took %.1fs", t);
  return {fail.empty() && checked > 0,
          fmt("20 instances x 3 objectives, %d iterations, %.1fs%s%s", checked, t, fail.empty() ? "" : "; ", fail.c_str())};
}

// dg = 4 exact grid on a tiny instance.
Outcome grid_correctness() {
  const grid::BaseModel base = grid::BaseModel::from_instance(instgen::generate(testing::tiny_config(1, 2)));
  grid::GridOptions o;
  o.dg = 4;
  const grid::GridResult r = grid::run_augmecon(base, grid::ExactSolver(exact_options(1e-9)), o);
  std::string fail;
  if (r.cells.size() > 16) fail = fmt("%zu cells", r.cells.size());
  std::set<std::pair<double, double>> seen;
  for (const grid::CellLog& c : r.cells) {
    if (!seen.insert({c.eps_env, c.eps_soc}).second) fail = fmt("repeated pair (%g, %g)", c.eps_env, c.eps_soc);
  }
  const double step = r.payoff.bounds.range(grid::kSoc) / o.dg;
  int jumps = 0;
  for (const grid::CellLog& c : r.cells) {
    if (c.status != grid::MonoStatus::kFeasible) continue;
    ++jumps;
    const int hand = step > 0.0 ? 1 + static_cast<int>(std::floor(c.l_soc / step)) : 1;
    // A slack a rounding error below a whole step counts that step.
    const bool tie = step > 0.0 && std::abs(c.l_soc / step - std::round(c.l_soc / step)) < 1e-9;
    if (c.jump != hand && !(tie && c.jump == hand + 1)) fail = fmt("jump %d vs hand %d", c.jump, hand);
  }
  double worst = 0.0;
  for (const grid::ParetoPoint& p : r.front) {
    const double env = std::max(0.0, p.f.f_env - p.eps_env) / std::max(1.0, std::abs(p.eps_env));
    const double soc = std::max(0.0, p.f.f_soc - p.eps_soc) / std::max(1.0, std::abs(p.eps_soc));
    worst = std::max({worst, env, soc});
    if (!ssc::validate_solution(base.tri->model, p.x).empty()) fail = "front point violates the model";
  }
  if (worst > 1e-6) fail = fmt("eps row violated by %.2e", worst);
  if (r.front.empty()) fail = "empty front";
  return {fail.empty(), fmt("%zu mono solves, %zu points, %d jumps checked, worst eps violation %.1e%s%s", r.cells.size(),
                            r.front.size(), jumps, worst, fail.empty() ? "" : "; ", fail.c_str())};
}

// Lagrangian heuristic against the exact optimum per objective.
Outcome heuristic_quality() {
  const auto t0 = Clock::now();
  int within_1pct = 0;
  double worst = 0.0;
  std::string per_seed;
  for (int seed = 1; seed <= 10; ++seed) {
    const grid::BaseModel base = grid::BaseModel::from_instance(instgen::generate(desk_config(seed)));
    double seed_worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      const grid::MonoProblem p = grid::payoff_problem(base, k);
      const grid::MonoResult ex = grid::ExactSolver(exact_options(1e-4)).solve(p);
      const grid::MonoResult lg = heur::MathLagr().solve(p);
      const double g = ex.feasible() && lg.feasible() ? metrics::gap(lg.objective, ex.objective) : milp::kInf;
      seed_worst = std::max(seed_worst, g);
    }
    worst = std::max(worst, seed_worst);
    if (seed_worst <= 0.01) ++within_1pct;
    per_seed += fmt(" %.2f%%", 100.0 * seed_worst);
  }
  const double t = seconds_since(t0);
  const bool pass = worst <= 0.05 && within_1pct >= 8 && t < 1800.0;
  return {pass, fmt("worst GAP %.2f%%, %d/10 within 1%%, %.0fs; per seed:%s", 100.0 * worst, within_1pct, t,
                    per_seed.c_str())};
}

// Subsolver invocations and wall time: lagr <= fix <= exact.
Outcome effort_ordering() {
  bool calls_ok = true, time_ok = true;
  std::string detail;
  for (int seed = 1; seed <= 3; ++seed) {
    const grid::BaseModel base = grid::BaseModel::from_instance(instgen::generate(desk_config(seed)));
    grid::GridOptions o;
    o.dg = 4;
    const grid::GridResult lg = grid::run_augmecon(base, heur::MathLagr(), o);
    const grid::GridResult fx = grid::run_augmecon(base, heur::MathFix(), o);
    const grid::GridResult ex = grid::run_augmecon(base, grid::ExactSolver(exact_options(1e-4, 60.0)), o);
    calls_ok = calls_ok && lg.mono_calls <= fx.mono_calls && fx.mono_calls <= ex.mono_calls;
    time_ok = time_ok && lg.time_s <= fx.time_s && fx.time_s <= ex.time_s;
    detail += fmt(" [seed %d calls %ld/%ld/%ld time %.2f/%.2f/%.2fs points %zu/%zu/%zu]", seed, lg.mono_calls,
                  fx.mono_calls, ex.mono_calls, lg.time_s, fx.time_s, ex.time_s, lg.front.size(), fx.front.size(),
                  ex.front.size());
  }
  return {calls_ok && time_ok, fmt("lagr/fix/exact, calls %s, time %s;%s", calls_ok ? "ordered" : "NOT ordered",
                                   time_ok ? "ordered" : "NOT ordered", detail.c_str())};
}

std::vector<std::size_t> pairwise_nondominated(const std::vector<grid::ObjectiveVector>& v) {
  std::vector<std::size_t> out;
  std::set<grid::ObjectiveVector> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < v.size() && !dominated; ++j) dominated = j != i && grid::dominates(v[j], v[i]);
    if (!dominated && seen.insert(v[i]).second) out.push_back(i);
  }
  return out;
}

Outcome metric_identities() {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> coarse(0, 6);
  std::string fail;
  for (int t = 0; t < 100; ++t) {
    std::vector<metrics::Vec3> p(1 + t % 20);
    for (auto& v : p) v = {u(rng), u(rng), u(rng)};
    if (metrics::r2(p, p, metrics::ideal_point(p)) != 0.0) fail = "r2(P,P) != 0";
    const double x = u(rng);
    if (metrics::gap(x, x) != 0.0) fail = "gap(x,x) != 0";
    if (metrics::asns(std::span(p).first(1), metrics::ideal_point(p)) != 0.0) fail = "asns(singleton) != 0";
  }
  int clouds = 0;
  for (; clouds < 100; ++clouds) {
    std::vector<grid::ObjectiveVector> v(50);
    // Alternate coarse integer clouds (ties, repeats) with continuous ones.
    for (auto& p : v) {
      p = clouds % 2 ? grid::ObjectiveVector{u(rng), u(rng), u(rng)}
                     : grid::ObjectiveVector{double(coarse(rng)), double(coarse(rng)), double(coarse(rng))};
    }
    std::set<grid::ObjectiveVector> got, want;
    for (std::size_t i : grid::nondominated(v)) got.insert(v[i]);
    for (std::size_t i : pairwise_nondominated(v)) want.insert(v[i]);
    if (got != want) fail = fmt("cloud %d: %zu vs %zu points", clouds, got.size(), want.size());
  }
  return {fail.empty(), fmt("100 identity draws, %d clouds of 50%s%s", clouds, fail.empty() ? "" : "; ", fail.c_str())};
}

Outcome generator_determinism() {
  std::string fail;
  long checked = 0;
  int instances = 0;
  const instgen::Profile profiles[] = {instgen::Profile::kStd, instgen::Profile::kCap, instgen::Profile::kSup, instgen::Profile::kRawc,
                                       instgen::Profile::kTechc};
  for (std::uint64_t seed = 1; checked < 10000 || seed <= 8; ++seed) {
    instgen::GenConfig cfg;
    cfg.seed = seed;
    cfg.periods = 2 + static_cast<int>(seed % 4);
    cfg.profile = profiles[seed % 5];
    const std::string a = ssc::to_json(instgen::generate(cfg)).dump();
    const std::string b = ssc::to_json(instgen::generate(cfg)).dump();
    if (a != b) fail = fmt("seed %llu not reproducible", static_cast<unsigned long long>(seed));
    const testing::SupportReport rep = testing::check_supports(cfg, instgen::generate(cfg));
    checked += rep.checked;
    ++instances;
    if (!rep.failures.empty()) fail = fmt("seed %llu: %s", static_cast<unsigned long long>(seed), rep.failures[0].c_str());
  }
  return {fail.empty(), fmt("%d instances byte-identical on regeneration, %ld values within supports%s%s", instances,
                            checked, fail.empty() ? "" : "; ", fail.c_str())};
}

// Warehouse installation in the social and economic optima.
Outcome warehouse_smoke() {
  std::string detail;
  bool literal = false;
  int both_open = 0, eco_closed = 0;
  for (int seed = 1; seed <= 5; ++seed) {
    instgen::GenConfig cfg = desk_config(seed);
    cfg.warehouses = 2;
    const ssc::SSCInstance inst = instgen::generate(cfg);
    const grid::BaseModel base = grid::BaseModel::from_instance(inst);
    const ssc::VariableCatalog& c = base.tri->catalog;
    const grid::ExactSolver solver(exact_options(1e-6));
    const grid::MonoResult eco = solver.solve(grid::payoff_problem(base, grid::kEco));
    const grid::MonoResult soc = solver.solve(grid::payoff_problem(base, grid::kSoc));
    if (!eco.feasible() || !soc.feasible()) return {false, fmt("seed %d: payoff infeasible", seed)};
    int soc_full = 0, eco_open = 0, n = 0;
    for (int i = 0; i < inst.num_entities(); ++i) {
      if (inst.entities[i].kind != ssc::EntityKind::kWarehouse) continue;
      ++n;
      if (soc.x[c.y(i)] > 0.5 && soc.x[c.yc(i)] >= inst.ea_max[i] * (1.0 - 1e-6)) ++soc_full;
      if (eco.x[c.y(i)] > 0.5) ++eco_open;
    }
    const bool ok = soc_full == n && eco_open == 0;
    if (seed == 1) literal = ok;
    both_open += soc_full == n;
    eco_closed += eco_open == 0;
    detail += fmt(" [seed %d soc opens %d/%d at max, eco opens %d]", seed, soc_full, n, eco_open);
  }
  return {literal, fmt("seed 1 %s; over seeds 1-5 soc opens both in %d, eco opens none in %d;%s",
                       literal ? "matches" : "differs", both_open, eco_closed, detail.c_str())};
}

}  // namespace
}  // namespace sscopt

int main(int argc, char** argv) {
  using namespace sscopt;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},   {"weak duality", weak_duality},
      {"grid correctness", grid_correctness},       {"heuristic quality", heuristic_quality},
      {"effort ordering", effort_ordering},         {"metric identities", metric_identities},
      {"generator determinism", generator_determinism}, {"warehouse smoke", warehouse_smoke},
  };
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!pick.empty() && !pick.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %d %-22s %s  %s\n", id, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
