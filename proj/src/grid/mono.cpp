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

#include "sscopt/grid/mono.hpp"

#include <chrono>

namespace sscopt::grid {

BaseModel BaseModel::from_instance(ssc::SSCInstance inst) {
  BaseModel b;
  auto tri = std::make_shared<ssc::TriObjectiveModel>(ssc::build_model(inst));
  b.instance = std::make_shared<const ssc::SSCInstance>(std::move(inst));
  b.tri = std::move(tri);
  return b;
}

MonoProblem payoff_problem(const BaseModel& base, int k) {
  MonoProblem p;
  p.base = base;
  p.model = base.tri->model;
  p.objective = base.tri->objective(k);
  p.primary = k;
  return p;
}

MonoProblem build_mop(const BaseModel& base, const PayoffBounds& bounds, double eps_env,
                      double eps_soc, double eps) {
  MonoProblem p = payoff_problem(base, kEco);
  p.eps_env = eps_env;
  p.eps_soc = eps_soc;
  p.l_env = p.model.add_var("l_env", milp::VarDomain::kContinuous, 0.0, kInf);
  p.l_soc = p.model.add_var("l_soc", milp::VarDomain::kContinuous, 0.0, kInf);

  auto eps_row = [&](const milp::LinObjective& f, int slack, double eps_value, const char* label) {
    milp::LinConstraint row;
    row.terms = f.terms;
    row.terms.push_back({slack, 1.0});
    row.sense = milp::Sense::kEqual;
    row.rhs = eps_value - f.constant;
    row.block = milp::Block::kKept;
    row.label = label;
    p.model.add_constraint(std::move(row));
  };
  eps_row(base.tri->f_env, p.l_env, eps_env, "eps_env");
  eps_row(base.tri->f_soc, p.l_soc, eps_soc, "eps_soc");

  if (bounds.range(kEnv) > 0.0) p.objective.terms.push_back({p.l_env, -eps / bounds.range(kEnv)});
  if (bounds.range(kSoc) > 0.0) {
    p.objective.terms.push_back({p.l_soc, -eps * 0.1 / bounds.range(kSoc)});
  }
  p.objective.terms = milp::canonical_terms(std::move(p.objective.terms));
  return p;
}

const char* to_string(MonoStatus s) {
  switch (s) {
    case MonoStatus::kFeasible: return "Feasible";
    case MonoStatus::kInfeasible: return "Infeasible";
    case MonoStatus::kFailed: return "Failed";
  }
  return "?";
}

MonoResult ExactSolver::solve(const MonoProblem& problem) const {
  const auto start = std::chrono::steady_clock::now();
  const milp::MilpResult r = milp::solve_milp(problem.model, problem.objective, options_);
  MonoResult out;
  out.solver_calls = 1;
  out.bound = r.best_bound;
  if (r.has_solution()) {
    out.status = MonoStatus::kFeasible;
    out.x = r.assignment;
    out.objective = r.objective;
  } else if (r.status == milp::MilpStatus::kInfeasible) {
    out.status = MonoStatus::kInfeasible;
  } else {
    out.status = MonoStatus::kFailed;
  }
  out.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace sscopt::grid
