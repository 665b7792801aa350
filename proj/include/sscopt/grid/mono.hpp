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

// Mono-objective subproblems of the epsilon-constraint method and the
// subsolver interface shared by the exact and heuristic solvers.

#ifndef SSCOPT_GRID_MONO_HPP_
#define SSCOPT_GRID_MONO_HPP_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "sscopt/milp/branch_and_bound.hpp"
#include "sscopt/milp/model.hpp"
#include "sscopt/ssc/instance.hpp"
#include "sscopt/ssc/model.hpp"

namespace sscopt::grid {

using milp::kInf;

inline constexpr int kEco = 0;
inline constexpr int kEnv = 1;
inline constexpr int kSoc = 2;

// Best and worst estimate per objective, minimization sense.
struct PayoffBounds {
  std::array<double, 3> lower{0.0, 0.0, 0.0};
  std::array<double, 3> upper{0.0, 0.0, 0.0};
  double range(int k) const { return upper[k] - lower[k]; }
};

// The compiled instance a family of subproblems is built from.
struct BaseModel {
  std::shared_ptr<const ssc::SSCInstance> instance;
  std::shared_ptr<const ssc::TriObjectiveModel> tri;

  static BaseModel from_instance(ssc::SSCInstance inst);
  int num_vars() const { return static_cast<int>(tri->model.num_vars()); }
};

struct MonoProblem {
  BaseModel base;
  // Base columns come first; slack columns, when present, are appended.
  milp::Model model;
  milp::LinObjective objective;
  int primary = kEco;  // objective being minimized
  int l_env = -1;
  int l_soc = -1;
  double eps_env = kInf;
  double eps_soc = kInf;
};

// Minimizes objective k alone over the base constraints.
MonoProblem payoff_problem(const BaseModel& base, int k);

// Minimizes f_eco - eps * (l_env / r_env + 0.1 * l_soc / r_soc) subject to
// f_env + l_env = eps_env and f_soc + l_soc = eps_soc. A zero range drops
// that slack term from the objective; the row stays.
MonoProblem build_mop(const BaseModel& base, const PayoffBounds& bounds, double eps_env,
                      double eps_soc, double eps);

enum class MonoStatus { kFeasible, kInfeasible, kFailed };
const char* to_string(MonoStatus s);

struct MonoResult {
  MonoStatus status = MonoStatus::kInfeasible;
  std::vector<double> x;  // problem columns; empty unless feasible
  double objective = kInf;
  double bound = -kInf;   // valid lower bound on the optimum when finite
  long solver_calls = 0;  // LP and MILP solves issued
  double time_s = 0.0;

  bool feasible() const { return status == MonoStatus::kFeasible; }
  double slack(int col) const { return col >= 0 && feasible() ? x[col] : 0.0; }
};

class MonoSolver {
 public:
  virtual ~MonoSolver() = default;
  virtual std::string name() const = 0;
  // Safe to call concurrently on distinct problems.
  virtual MonoResult solve(const MonoProblem& problem) const = 0;
};

// Branch and bound on the whole subproblem. A time limit without an
// incumbent reports kFailed.
class ExactSolver : public MonoSolver {
 public:
  explicit ExactSolver(milp::MilpOptions options = {}) : options_(options) {}
  std::string name() const override { return "exact"; }
  MonoResult solve(const MonoProblem& problem) const override;

 private:
  milp::MilpOptions options_;
};

}  // namespace sscopt::grid

#endif  // SSCOPT_GRID_MONO_HPP_
