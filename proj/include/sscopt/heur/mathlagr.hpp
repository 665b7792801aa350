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

// Lagrangian matheuristic: relax the rows tying activity to installation
// binaries, bound with the relaxed problem, recover feasible points by
// solving the subproblem with every unused flow fixed to zero.

#ifndef SSCOPT_HEUR_MATHLAGR_HPP_
#define SSCOPT_HEUR_MATHLAGR_HPP_

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sscopt/grid/mono.hpp"

namespace sscopt::heur {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One relaxed row in "g(x) <= 0" orientation: g(x) = sign * (a.x - rhs).
struct RelaxedRow {
  int row = 0;
  double sign = 1.0;
};

// The relaxed problem for a fixed multiplier vector.
struct LagrangianProblem {
  milp::Model model;  // integrality relaxed
  milp::LinObjective objective;
  std::vector<RelaxedRow> relaxed;
};

// Rows of the relaxable block, one entry per inequality (equalities give two).
std::vector<RelaxedRow> relaxed_rows(const milp::Model& model);

// Constraint set of the relaxed problem: the kept block plus, for every
// relaxable row, the variant with installation binaries at their loosest
// value. Rows that become implied by variable bounds are left out.
milp::Model relaxed_constraints(const milp::Model& model, const std::vector<int>& install_binaries);

// f(x) + sum_i lambda_i g_i(x).
milp::LinObjective lagrangian_objective(const milp::Model& model, const milp::LinObjective& f,
                                        const std::vector<RelaxedRow>& relaxed,
                                        const std::vector<double>& lambda);

LagrangianProblem build_prl(const grid::MonoProblem& mop, const std::vector<double>& lambda);

// g(x) for each relaxed row.
std::vector<double> subgradient(const milp::Model& model, const std::vector<RelaxedRow>& relaxed,
                                std::span<const double> x);

// The subproblem with every flow that is zero in x_relaxed fixed to zero.
milp::Model null_flow_problem(const grid::MonoProblem& mop, std::span<const double> x_relaxed, double tol);

enum class UpdateRule { kStandard, kUniform };
UpdateRule update_rule_from_string(const std::string& s);
const char* to_string(UpdateRule r);

enum class SubgradientPoint { kRelaxed, kFeasible };

// Standard: theta = st (UB - L) / |g|^2, lambda' = max(0, lambda + theta g).
// Uniform: every entry becomes st (UB - L) / |g|. A zero g leaves
// lambda unchanged.
std::vector<double> update_multipliers(const std::vector<double>& lambda, const std::vector<double>& g,
                                       double st, double ub, double l_val, UpdateRule rule);

struct LagrOptions {
  int k_max = 10;
  // Step scalar; unset picks the default for the subproblem's primary
  // objective (eco 1e-6, env 1e-10, soc 1e-2).
  std::optional<double> st;
  UpdateRule rule = UpdateRule::kStandard;
  SubgradientPoint g_at = SubgradientPoint::kRelaxed;
  double flow_zero_tol = 1e-6;
  // Restricted subproblems; their time limit is clipped to what remains of
  // time_limit_s.
  milp::MilpOptions milp = [] {
    milp::MilpOptions o;
    o.rel_gap = 1e-4;
    return o;
  }();
  double time_limit_s = milp::kInf;
  std::ostream* trace = nullptr;  // JSON lines, one per iteration
};

double default_step(int primary_objective);

struct LagrIteration {
  int k = 0;
  double l_val = 0.0;  // relaxed optimum this iteration
  double lb = -milp::kInf;
  double ub = milp::kInf;
  double g_norm = 0.0;
  bool feasible = false;  // restricted subproblem produced a point
  bool reused = false;    // restricted subproblem already solved earlier

  nlohmann::json to_json() const;
};

struct LagrRun {
  grid::MonoResult result;
  std::vector<LagrIteration> iterations;
  std::vector<double> lambda;
};

class MathLagr : public grid::MonoSolver {
 public:
  explicit MathLagr(LagrOptions options = {}) : options_(options) {}
  std::string name() const override { return "lagr"; }
  grid::MonoResult solve(const grid::MonoProblem& problem) const override { return run(problem).result; }
  LagrRun run(const grid::MonoProblem& problem) const;

 private:
  LagrOptions options_;
};

}  // namespace sscopt::heur

#endif  // SSCOPT_HEUR_MATHLAGR_HPP_
