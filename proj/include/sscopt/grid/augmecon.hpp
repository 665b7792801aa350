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

// Augmented epsilon-constraint grid with bypass jumps over the social axis.

#ifndef SSCOPT_GRID_AUGMECON_HPP_
#define SSCOPT_GRID_AUGMECON_HPP_

#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscopt/grid/mono.hpp"

namespace sscopt::grid {

// Raised when a payoff subproblem has no feasible point or the subsolver fails.
class PayoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PayoffTable {
  PayoffBounds bounds;
  // Row k: the three objective values of the point minimizing objective k.
  std::array<ssc::ObjectiveValues, 3> rows;
  std::array<std::vector<double>, 3> points;  // base columns
  long solver_calls = 0;
  long mono_calls = 0;
};

// fL_k is the subsolver's bound for objective k (its own incumbent value when
// no finite bound is reported); fU_k the worst value of objective k over the
// three incumbents.
PayoffTable estimate_bounds(const BaseModel& base, const MonoSolver& solver);

struct CellLog {
  int gr_env = 0;
  int gr_soc = 0;
  double eps_env = 0.0;
  double eps_soc = 0.0;
  MonoStatus status = MonoStatus::kInfeasible;
  double l_soc = 0.0;
  int jump = 1;  // cells advanced on the social axis after this solve
  double time_s = 0.0;
};

struct ParetoPoint {
  std::vector<double> x;  // base columns
  ssc::ObjectiveValues f;
  double eps_env = 0.0;
  double eps_soc = 0.0;
  int gr_env = 0;
  int gr_soc = 0;
  std::string method;
  double time_s = 0.0;
};

struct GridOptions {
  int dg = 10;
  double eps = 1e-3;
  bool bypass = true;
  std::function<void(const CellLog&)> on_cell;
};

struct GridResult {
  PayoffTable payoff;
  std::vector<ParetoPoint> front;  // nondominated
  std::vector<CellLog> cells;
  long mono_calls = 0;    // subsolver invocations, payoff included
  long solver_calls = 0;  // LP and MILP solves underneath
  double time_s = 0.0;
};

// Cells per axis actually visited: one when the range is degenerate.
int axis_cells(const PayoffBounds& b, int k, int dg);

// Cells skipped plus one: 1 + floor(l_soc / step), or 1 without a step.
int bypass_jump(double l_soc, double step);

GridResult run_augmecon(const BaseModel& base, const MonoSolver& solver,
                        const GridOptions& options = {});
// Same, reusing an existing payoff table.
GridResult run_augmecon(const BaseModel& base, const MonoSolver& solver, const PayoffTable& payoff,
                        const GridOptions& options = {});

using ObjectiveVector = std::array<double, 3>;

// True when a is no worse than b everywhere and better somewhere.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Equal up to a relative 1e-9 per objective; the same design solved in two
// cells differs only in rounding.
bool same_point(const ObjectiveVector& a, const ObjectiveVector& b);

// Indices of the nondominated vectors in input order; repeated points keep
// only one representative.
std::vector<std::size_t> nondominated(std::span<const ObjectiveVector> points);

std::vector<ParetoPoint> filter_dominated(std::vector<ParetoPoint> points);

ObjectiveVector as_vector(const ssc::ObjectiveValues& f);

}  // namespace sscopt::grid

#endif  // SSCOPT_GRID_AUGMECON_HPP_
