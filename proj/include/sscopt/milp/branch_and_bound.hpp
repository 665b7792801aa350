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

#ifndef SSCOPT_MILP_BRANCH_AND_BOUND_HPP_
#define SSCOPT_MILP_BRANCH_AND_BOUND_HPP_

#include <vector>

#include "sscopt/milp/model.hpp"
#include "sscopt/milp/simplex.hpp"

namespace sscopt::milp {

enum class MilpStatus { kOptimal, kFeasible, kInfeasible, kUnbounded, kTimeLimit };
const char* to_string(MilpStatus s);
MilpStatus milp_status_from_string(const std::string& s);

struct MilpOptions {
  // Stop once (incumbent - bound) <= rel_gap * max(1, |incumbent|).
  double rel_gap = 0.01;
  double time_limit_s = kInf;
  long node_limit = 0;  // 0 means unlimited
  bool diving = true;
  SimplexOptions lp;
};

struct MilpResult {
  MilpStatus status = MilpStatus::kInfeasible;
  std::vector<double> assignment;  // empty without an incumbent
  double objective = kInf;
  double best_bound = -kInf;
  double rel_gap = kInf;
  long nodes = 0;
  long lp_iterations = 0;
  double time_s = 0.0;

  bool has_solution() const { return !assignment.empty(); }
};

// Minimizes objective subject to model. Best-bound node selection;
// branches on the most fractional binary, then the most fractional general
// integer, ties to the lowest index.
MilpResult solve_milp(const Model& model, const LinObjective& objective,
                      const MilpOptions& options = {});

}  // namespace sscopt::milp

#endif  // SSCOPT_MILP_BRANCH_AND_BOUND_HPP_
