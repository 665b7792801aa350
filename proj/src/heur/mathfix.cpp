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

#include "sscopt/heur/mathfix.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <set>

#include "sscopt/heur/mathlagr.hpp"

namespace sscopt::heur {

double trip_lower_bound(double weight_kg, double vcap_kg) {
  return std::ceil(weight_kg / vcap_kg - 1e-9);
}

double fleet_lower_bound(double trips, double ntrips) { return std::ceil(trips / ntrips - 1e-9); }

std::map<int, double> implied_binary_fixes(const milp::Model& model, const std::vector<int>& install,
                                           std::span<const double> x, double tol) {
  const std::set<int> candidates(install.begin(), install.end());
  std::map<int, double> fixes;
  for (int j : install) {
    if (x[j] > tol) fixes[j] = 1.0;
  }
  // Without its rows the relaxation leaves installation binaries at zero even
  // where flows pass; a binary is also needed where zeroing it breaks a row.
  for (const milp::LinConstraint& r : model.constraints()) {
    if (r.block != milp::Block::kRelaxable || r.sense == milp::Sense::kGreaterEqual) continue;
    double rest = 0.0;
    for (const milp::LinTerm& t : r.terms) {
      if (!candidates.contains(t.var)) rest += t.coef * x[t.var];
    }
    if (rest <= r.rhs + tol) continue;
    for (const milp::LinTerm& t : r.terms) {
      if (candidates.contains(t.var) && t.coef < 0.0) fixes[t.var] = 1.0;
    }
  }
  return fixes;
}

std::map<int, double> transport_lower_bounds(const grid::MonoProblem& problem, std::span<const double> x,
                                             double tol) {
  const ssc::SSCInstance& inst = *problem.base.instance;
  const ssc::VariableCatalog& c = problem.base.tri->catalog;
  const milp::Model& m = problem.model;
  std::map<int, double> lower;
  std::map<std::array<int, 3>, double> sender_trips;  // (mode, sender, t)
  for (const ssc::Lane& l : c.lanes) {
    const ssc::Mode& mode = inst.modes[l.mode];
    if (mode.kind != ssc::ModeKind::kTruck) continue;
    for (int t = 0; t < inst.periods; ++t) {
      double weight = 0.0;
      for (int item : l.items) {
        const int v = c.x(item, l.mode, l.from, l.to, t);
        if (v >= 0 && x[v] > tol) weight += inst.pw[item] * x[v];
      }
      const int q = c.q(l.mode, l.from, l.to, t);
      if (weight <= 0.0 || q < 0) continue;
      const double lb = std::min(trip_lower_bound(weight, mode.vcap), m.var(q).upper);
      lower[q] = lb;
      sender_trips[{l.mode, l.from, t}] += lb;
    }
  }
  for (const auto& [key, kvar] : c.fleet_vars()) {
    const auto [a, i] = key;
    const ssc::Mode& mode = inst.modes[a];
    if (mode.kind != ssc::ModeKind::kTruck) continue;
    double need = 0.0;
    for (int t = 0; t < inst.periods; ++t) {
      auto it = sender_trips.find({a, i, t});
      if (it != sender_trips.end()) need = std::max(need, fleet_lower_bound(it->second, mode.ntrips));
    }
    if (need > 0.0) lower[kvar] = std::min(need, m.var(kvar).upper);
  }
  return lower;
}

milp::Model restrict_problem(const grid::MonoProblem& problem, std::span<const double> relaxed, double tol,
                             bool transport_bounds) {
  milp::Model out = milp::fix_variables(
      problem.model, implied_binary_fixes(problem.model, problem.base.tri->relaxed_binaries, relaxed, tol));
  if (!transport_bounds) return out;
  for (const auto& [j, lb] : transport_lower_bounds(problem, relaxed, tol)) {
    milp::VarSpec& v = out.mutable_var(j);
    v.lower = std::max(v.lower, lb);
  }
  return out;
}

grid::MonoResult MathFix::solve(const grid::MonoProblem& problem) const {
  const auto start = std::chrono::steady_clock::now();
  grid::MonoResult res;
  auto finish = [&] {
    res.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
  };

  const milp::Model relaxed =
      milp::relax_integrality(relaxed_constraints(problem.model, problem.base.tri->relaxed_binaries));
  milp::SimplexOptions lp = options_.milp.lp;
  const milp::LpResult lr = milp::solve_lp(relaxed, problem.objective, lp);
  ++res.solver_calls;
  if (lr.status == milp::LpStatus::kInfeasible) {
    res.status = grid::MonoStatus::kInfeasible;
    return finish();
  }
  if (lr.status != milp::LpStatus::kOptimal) {
    res.status = grid::MonoStatus::kFailed;
    return finish();
  }
  res.bound = lr.objective;
  if (problem.model.check_feasible(lr.x).empty()) {
    res.status = grid::MonoStatus::kFeasible;
    res.x = lr.x;
    res.objective = lr.objective;
    return finish();
  }

  milp::MilpResult mr;
  // The trip bounds can overshoot what the fleet caps allow; retry without.
  for (bool transport_bounds : {true, false}) {
    const milp::Model restricted = restrict_problem(problem, lr.x, options_.positive_tol, transport_bounds);
    mr = milp::solve_milp(restricted, problem.objective, options_.milp);
    ++res.solver_calls;
    if (mr.status != milp::MilpStatus::kInfeasible) break;
  }
  if (mr.has_solution()) {
    res.status = grid::MonoStatus::kFeasible;
    res.x = mr.assignment;
    res.objective = mr.objective;
  } else {
    res.status = mr.status == milp::MilpStatus::kInfeasible ? grid::MonoStatus::kInfeasible
                                                            : grid::MonoStatus::kFailed;
  }
  return finish();
}

}  // namespace sscopt::heur
