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

#include "sscopt/heur/mathlagr.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <set>

namespace sscopt::heur {

using milp::kInf;
using milp::LinConstraint;
using milp::LinObjective;
using milp::LinTerm;
using milp::Sense;

std::vector<RelaxedRow> relaxed_rows(const milp::Model& model) {
  std::vector<RelaxedRow> out;
  for (std::size_t i = 0; i < model.num_constraints(); ++i) {
    const LinConstraint& r = model.constraint(static_cast<int>(i));
    if (r.block != milp::Block::kRelaxable) continue;
    const int row = static_cast<int>(i);
    if (r.sense != Sense::kGreaterEqual) out.push_back({row, 1.0});
    if (r.sense != Sense::kLessEqual) out.push_back({row, -1.0});
  }
  return out;
}

namespace {

// Adds the loosened copy of one inequality, unless variable bounds already
// imply it.
void add_loosened(milp::Model& out, const milp::Model& src, const LinConstraint& r, Sense sense,
                  const std::set<int>& install, const std::string& label) {
  LinConstraint c;
  c.sense = sense;
  c.rhs = r.rhs;
  c.block = milp::Block::kKept;
  c.label = label;
  const bool le = sense == Sense::kLessEqual;
  for (const LinTerm& t : r.terms) {
    if (!install.contains(t.var)) {
      c.terms.push_back(t);
      continue;
    }
    const milp::VarSpec& v = src.var(t.var);
    const double at_lo = t.coef * v.lower, at_up = t.coef * v.upper;
    c.rhs -= le ? std::min(at_lo, at_up) : std::max(at_lo, at_up);
  }
  double extreme = 0.0;  // largest activity for <=, smallest for >=
  for (const LinTerm& t : c.terms) {
    const milp::VarSpec& v = src.var(t.var);
    const bool take_up = le == (t.coef > 0.0);
    const double bound = take_up ? v.upper : v.lower;
    if (!std::isfinite(bound)) {
      extreme = le ? kInf : -kInf;
      break;
    }
    extreme += t.coef * bound;
  }
  if (le ? extreme <= c.rhs : extreme >= c.rhs) return;
  out.add_constraint(std::move(c));
}

}  // namespace

milp::Model relaxed_constraints(const milp::Model& model, const std::vector<int>& install_binaries) {
  const std::set<int> install(install_binaries.begin(), install_binaries.end());
  milp::Model out;
  for (const milp::VarSpec& v : model.vars()) out.add_var(v);
  for (const LinConstraint& r : model.constraints()) {
    if (r.block == milp::Block::kKept) {
      out.add_constraint(r);
      continue;
    }
    if (r.sense == Sense::kEqual) {
      add_loosened(out, model, r, Sense::kLessEqual, install, r.label + "#le");
      add_loosened(out, model, r, Sense::kGreaterEqual, install, r.label + "#ge");
    } else {
      add_loosened(out, model, r, r.sense, install, r.label);
    }
  }
  return out;
}

LinObjective lagrangian_objective(const milp::Model& model, const LinObjective& f,
                                  const std::vector<RelaxedRow>& relaxed,
                                  const std::vector<double>& lambda) {
  if (lambda.size() != relaxed.size()) {
    throw DimensionError("multiplier vector has " + std::to_string(lambda.size()) + " entries, expected " +
                         std::to_string(relaxed.size()));
  }
  LinObjective out = f;
  for (std::size_t i = 0; i < relaxed.size(); ++i) {
    if (lambda[i] == 0.0) continue;
    const LinConstraint& r = model.constraint(relaxed[i].row);
    const double w = lambda[i] * relaxed[i].sign;
    for (const LinTerm& t : r.terms) out.terms.push_back({t.var, w * t.coef});
    out.constant -= w * r.rhs;
  }
  out.terms = milp::canonical_terms(std::move(out.terms));
  return out;
}

LagrangianProblem build_prl(const grid::MonoProblem& mop, const std::vector<double>& lambda) {
  LagrangianProblem p;
  p.relaxed = relaxed_rows(mop.model);
  p.objective = lagrangian_objective(mop.model, mop.objective, p.relaxed, lambda);
  p.model = milp::relax_integrality(relaxed_constraints(mop.model, mop.base.tri->relaxed_binaries));
  return p;
}

std::vector<double> subgradient(const milp::Model& model, const std::vector<RelaxedRow>& relaxed,
                                std::span<const double> x) {
  std::vector<double> g;
  g.reserve(relaxed.size());
  for (const RelaxedRow& rr : relaxed) {
    const LinConstraint& r = model.constraint(rr.row);
    g.push_back(rr.sign * (r.activity(x) - r.rhs));
  }
  return g;
}

milp::Model null_flow_problem(const grid::MonoProblem& mop, std::span<const double> x_relaxed, double tol) {
  std::map<int, double> fixes;
  for (int j : mop.base.tri->catalog.flow_vars()) {
    if (std::abs(x_relaxed[j]) <= tol) fixes[j] = 0.0;
  }
  return milp::fix_variables(mop.model, fixes);
}

UpdateRule update_rule_from_string(const std::string& s) {
  if (s == "standard") return UpdateRule::kStandard;
  if (s == "uniform") return UpdateRule::kUniform;
  throw std::invalid_argument("unknown update rule " + s + " (expected standard or uniform)");
}

const char* to_string(UpdateRule r) {
  return r == UpdateRule::kStandard ? "standard" : "uniform";
}

std::vector<double> update_multipliers(const std::vector<double>& lambda, const std::vector<double>& g,
                                       double st, double ub, double l_val, UpdateRule rule) {
  if (lambda.size() != g.size()) throw DimensionError("subgradient and multipliers differ in length");
  double norm2 = 0.0;
  for (double v : g) norm2 += v * v;
  if (norm2 == 0.0) return lambda;
  std::vector<double> out(lambda.size());
  if (rule == UpdateRule::kUniform) {
    const double value = std::max(0.0, st * (ub - l_val) / std::sqrt(norm2));
    std::fill(out.begin(), out.end(), value);
    return out;
  }
  const double theta = st * (ub - l_val) / norm2;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(0.0, lambda[i] + theta * g[i]);
  return out;
}

double default_step(int primary_objective) {
  switch (primary_objective) {
    case grid::kEnv: return 1e-10;
    case grid::kSoc: return 1e-2;
    default: return 1e-6;
  }
}

nlohmann::json LagrIteration::to_json() const {
  return {{"k", k},          {"L", l_val},         {"LB", lb},          {"UB", ub},
          {"g_norm", g_norm}, {"feasible", feasible}, {"reused", reused}};
}

LagrRun MathLagr::run(const grid::MonoProblem& problem) const {
  const auto start = std::chrono::steady_clock::now();
  LagrRun out;
  grid::MonoResult& res = out.result;
  const milp::Model& mop = problem.model;
  const std::vector<RelaxedRow> relaxed = relaxed_rows(mop);
  const milp::Model prl = milp::relax_integrality(relaxed_constraints(mop, problem.base.tri->relaxed_binaries));
  const double st = options_.st.value_or(default_step(problem.primary));
  const std::vector<int>& flows = problem.base.tri->catalog.flow_vars();

  std::vector<double> lambda(relaxed.size(), 0.0);
  milp::SimplexOptions lp = options_.milp.lp;
  milp::SimplexEngine engine(prl, lagrangian_objective(mop, problem.objective, relaxed, lambda), lp);

  // Restricted subproblems keyed by the set of flows fixed to zero.
  std::map<std::vector<int>, milp::MilpResult> solved;
  double lb = -kInf, ub = kInf;
  bool prl_infeasible = false;

  auto remaining = [&] {
    return options_.time_limit_s -
           std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  for (int k = 0; k < options_.k_max && remaining() > 0.0; ++k) {
    const milp::LpStatus st_lp =
        k == 0 ? engine.solve()
               : engine.reoptimize_objective(lagrangian_objective(mop, problem.objective, relaxed, lambda));
    ++res.solver_calls;
    if (st_lp == milp::LpStatus::kInfeasible) {
      prl_infeasible = true;
      break;
    }
    if (st_lp != milp::LpStatus::kOptimal) break;
    const std::vector<double> x_rl = engine.solution();
    LagrIteration it;
    it.k = k;
    it.l_val = engine.objective_value();
    lb = std::max(lb, it.l_val);

    std::vector<int> zero;
    for (int j : flows) {
      if (std::abs(x_rl[j]) <= options_.flow_zero_tol) zero.push_back(j);
    }
    auto found = solved.find(zero);
    it.reused = found != solved.end();
    if (!it.reused) {
      const milp::Model restricted = null_flow_problem(problem, x_rl, options_.flow_zero_tol);
      milp::MilpOptions mo = options_.milp;
      mo.time_limit_s = std::min(mo.time_limit_s, remaining());
      found = solved.emplace(zero, milp::solve_milp(restricted, problem.objective, mo)).first;
      ++res.solver_calls;
    }
    const milp::MilpResult& pf = found->second;
    it.feasible = pf.has_solution();
    if (it.feasible && pf.objective < ub) {
      ub = pf.objective;
      res.x = pf.assignment;
    }
    const bool at_feasible = options_.g_at == SubgradientPoint::kFeasible && it.feasible;
    const std::vector<double> g = subgradient(mop, relaxed, at_feasible ? pf.assignment : x_rl);
    double norm2 = 0.0;
    for (double v : g) norm2 += v * v;
    it.g_norm = std::sqrt(norm2);
    it.lb = lb;
    it.ub = ub;
    if (options_.trace) *options_.trace << it.to_json().dump() << '\n';
    out.iterations.push_back(it);

    if (std::isfinite(ub) && ub - lb <= 1e-6 * std::max(1.0, std::abs(ub))) break;
    // Before any feasible point exists, aim a tenth of |L| above the bound.
    const double target = std::isfinite(ub) ? ub : it.l_val + 0.1 * std::max(1.0, std::abs(it.l_val));
    lambda = update_multipliers(lambda, g, st, target, it.l_val, options_.rule);
  }

  out.lambda = std::move(lambda);
  res.bound = lb;
  if (!res.x.empty()) {
    res.status = grid::MonoStatus::kFeasible;
    res.objective = ub;
  } else {
    res.status = prl_infeasible || !out.iterations.empty() ? grid::MonoStatus::kInfeasible
                                                             : grid::MonoStatus::kFailed;
  }
  res.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace sscopt::heur
