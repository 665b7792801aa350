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

#include "sscopt/grid/augmecon.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace sscopt::grid {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

const char* objective_name(int k) { return k == kEco ? "eco" : k == kEnv ? "env" : "soc"; }

}  // namespace

PayoffTable estimate_bounds(const BaseModel& base, const MonoSolver& solver) {
  PayoffTable t;
  const int n = base.num_vars();
  for (int k = 0; k < 3; ++k) {
    const MonoResult r = solver.solve(payoff_problem(base, k));
    ++t.mono_calls;
    t.solver_calls += r.solver_calls;
    if (!r.feasible()) {
      throw PayoffError(std::string("payoff subproblem for ") + objective_name(k) + " is " +
                        to_string(r.status));
    }
    t.points[k].assign(r.x.begin(), r.x.begin() + n);
    t.rows[k] = ssc::evaluate_objectives(*base.tri, t.points[k]);
    const double own = t.rows[k][k];
    t.bounds.lower[k] = std::isfinite(r.bound) ? std::min(r.bound, own) : own;
  }
  for (int k = 0; k < 3; ++k) {
    t.bounds.upper[k] = std::max({t.rows[0][k], t.rows[1][k], t.rows[2][k]});
  }
  return t;
}

int axis_cells(const PayoffBounds& b, int k, int dg) { return b.range(k) > 0.0 ? dg : 1; }

int bypass_jump(double l_soc, double step) {
  if (!(step > 0.0)) return 1;
  // A slack that lands a hair under a multiple of the step still counts it.
  return 1 + static_cast<int>(std::floor(l_soc / step + 1e-9));
}

GridResult run_augmecon(const BaseModel& base, const MonoSolver& solver,
                        const GridOptions& options) {
  const auto start = Clock::now();
  GridResult r = run_augmecon(base, solver, estimate_bounds(base, solver), options);
  r.time_s = seconds_since(start);
  return r;
}

GridResult run_augmecon(const BaseModel& base, const MonoSolver& solver, const PayoffTable& payoff,
                        const GridOptions& options) {
  if (options.dg < 1) throw std::invalid_argument("grid needs at least one cell per axis");
  const auto start = Clock::now();
  GridResult out;
  out.payoff = payoff;
  out.mono_calls = payoff.mono_calls;
  out.solver_calls = payoff.solver_calls;
  const PayoffBounds& b = payoff.bounds;
  const int n = base.num_vars();
  const int cells_env = axis_cells(b, kEnv, options.dg);
  const int cells_soc = axis_cells(b, kSoc, options.dg);
  const double step_env = b.range(kEnv) / options.dg;
  const double step_soc = b.range(kSoc) / options.dg;

  std::vector<ParetoPoint> found;
  for (int gr_env = 0; gr_env < cells_env; ++gr_env) {
    const double eps_env = b.upper[kEnv] - gr_env * step_env;
    int gr_soc = 0;
    while (gr_soc < cells_soc) {
      const double eps_soc = b.upper[kSoc] - gr_soc * step_soc;
      const MonoProblem p = build_mop(base, b, eps_env, eps_soc, options.eps);
      const MonoResult res = solver.solve(p);
      ++out.mono_calls;
      out.solver_calls += res.solver_calls;

      CellLog log{gr_env, gr_soc, eps_env, eps_soc, res.status, 0.0, 1, res.time_s};
      if (res.feasible()) {
        log.l_soc = res.slack(p.l_soc);
        if (options.bypass) log.jump = bypass_jump(log.l_soc, step_soc);
        ParetoPoint pt;
        pt.x.assign(res.x.begin(), res.x.begin() + n);
        pt.f = ssc::evaluate_objectives(*base.tri, pt.x);
        pt.eps_env = eps_env;
        pt.eps_soc = eps_soc;
        pt.gr_env = gr_env;
        pt.gr_soc = gr_soc;
        pt.method = solver.name();
        pt.time_s = res.time_s;
        found.push_back(std::move(pt));
        gr_soc += log.jump;
      } else {
        // Tighter social thresholds only shrink the region further.
        log.jump = cells_soc - gr_soc;
        gr_soc = cells_soc;
      }
      if (options.on_cell) options.on_cell(log);
      out.cells.push_back(log);
    }
  }
  out.front = filter_dominated(std::move(found));
  out.time_s = seconds_since(start);
  return out;
}

ObjectiveVector as_vector(const ssc::ObjectiveValues& f) { return {f.f_eco, f.f_env, f.f_soc}; }

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  bool better = false;
  for (int k = 0; k < 3; ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k]) better = true;
  }
  return better;
}

bool same_point(const ObjectiveVector& a, const ObjectiveVector& b) {
  for (int k = 0; k < 3; ++k) {
    if (std::abs(a[k] - b[k]) > 1e-9 * std::max({1.0, std::abs(a[k]), std::abs(b[k])})) return false;
  }
  return true;
}

std::vector<std::size_t> nondominated(std::span<const ObjectiveVector> points) {
  // Lexicographic order puts every dominator before what it dominates, so
  // one pass against the kept set suffices.
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    bool drop = false;
    for (std::size_t j : kept) {
      if (same_point(points[j], points[i]) || dominates(points[j], points[i])) {
        drop = true;
        break;
      }
    }
    if (!drop) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<ParetoPoint> filter_dominated(std::vector<ParetoPoint> points) {
  std::vector<ObjectiveVector> v;
  v.reserve(points.size());
  for (const ParetoPoint& p : points) v.push_back(as_vector(p.f));
  std::vector<ParetoPoint> out;
  for (std::size_t i : nondominated(v)) out.push_back(std::move(points[i]));
  return out;
}

}  // namespace sscopt::grid
