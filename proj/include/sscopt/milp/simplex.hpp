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

#ifndef SSCOPT_MILP_SIMPLEX_HPP_
#define SSCOPT_MILP_SIMPLEX_HPP_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sscopt/milp/model.hpp"

namespace sscopt::milp {

using Clock = std::chrono::steady_clock;

enum class PricingRule {
  kBland,    // lowest-index improving column; never cycles
  kDantzig,  // largest reduced cost, falling back to Bland while stalled
};

struct SimplexOptions {
  PricingRule pricing = PricingRule::kDantzig;
  double primal_tol = 1e-9;
  double dual_tol = 1e-9;
  double pivot_tol = 1e-9;
  long max_iterations = 0;  // 0 picks a size-based default
  std::optional<Clock::time_point> deadline;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit, kTimeLimit };
const char* to_string(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;  // structural values, original units
  double objective = 0.0;
  long iterations = 0;
};

// Minimizes objective over the continuous relaxation of model.
LpResult solve_lp(const Model& model, const LinObjective& objective,
                  const SimplexOptions& options = {});

// Revised bounded-variable simplex over a sparse LU of the basis plus an
// eta file. Rows and columns are equilibrated with power-of-two factors so
// scaling is exact. Kept alive across branch and bound nodes so children
// reoptimize with the dual simplex; copies share the last LU.
class SimplexEngine {
 public:
  SimplexEngine(const Model& model, const LinObjective& objective, SimplexOptions options = {});

  // Two-phase primal simplex from a slack/artificial basis with the
  // current bounds.
  LpStatus solve();

  // Replaces structural bounds (original units) and restores primal
  // feasibility with the dual simplex. Falls back to solve() when the
  // current basis is not dual feasible for the new bounds.
  LpStatus reoptimize_bounds(std::span<const double> lower, std::span<const double> upper);

  // Swaps the objective and continues the primal simplex from the current
  // basis. Requires a primal feasible basis (after kOptimal).
  LpStatus reoptimize_objective(const LinObjective& objective);

  std::vector<double> solution() const;
  double objective_value() const;
  LpStatus status() const { return status_; }
  long iterations() const { return iterations_; }
  void set_deadline(std::optional<Clock::time_point> d) { options_.deadline = d; }
  const std::vector<double>& lower() const { return orig_lo_; }
  const std::vector<double>& upper() const { return orig_up_; }

 private:
  struct LuFactor;  // immutable LU of the last refactorized basis
  struct Eta {
    int row = 0;
    double pivot = 1.0;
    std::vector<int> idx;  // off-pivot entries of the entering column
    std::vector<double> val;
  };

  void compute_scaling(const Model& model);
  void set_cost(const LinObjective& objective);
  void initialize();
  bool refactor();
  void ftran(std::vector<double>& v) const;
  void btran(std::vector<double>& v) const;
  void load_column(int j, std::vector<double>& v) const;
  double dot_column(int j, const std::vector<double>& y) const;
  void pivot_row(int r, std::vector<double>& alpha) const;
  void compute_reduced_costs(const std::vector<double>& cost);
  void compute_basic_values();
  bool refresh(const std::vector<double>& cost);
  void change_basis(int r, int q, const std::vector<double>& column, const std::vector<double>& row);
  LpStatus run_primal(const std::vector<double>& cost);
  LpStatus run_dual(const std::vector<double>& cost);
  double next_perturbation();
  void perturb_bounds();
  bool restore_bounds();
  int choose_entering(bool stalled) const;
  bool budget_exhausted(LpStatus* why);

  SimplexOptions options_;
  int m_ = 0;
  int n_ = 0;
  int ncol_ = 0;
  // Scaled structural columns, compressed by column.
  std::vector<int> col_start_;
  std::vector<int> col_row_;
  std::vector<double> col_val_;
  std::vector<Sense> senses_;
  std::vector<double> rhs_;  // scaled
  std::vector<double> row_scale_;
  std::vector<double> col_scale_;
  double obj_scale_ = 1.0;
  double obj_constant_ = 0.0;
  std::vector<double> orig_cost_;
  std::vector<double> orig_lo_;
  std::vector<double> orig_up_;
  std::vector<int> art_row_;
  std::vector<double> art_sign_;

  std::shared_ptr<const LuFactor> lu_;
  std::vector<Eta> etas_;
  std::vector<double> lo_;
  std::vector<double> up_;
  std::vector<double> x_;
  std::vector<double> cost_;
  std::vector<double> d_;
  std::vector<int> basis_;
  std::vector<int> where_;  // row of a basic column, -1 otherwise
  std::vector<char> at_upper_;
  // Bounds before anti-degeneracy perturbation; empty when unperturbed.
  std::vector<double> saved_lo_;
  std::vector<double> saved_up_;
  std::uint64_t perturb_state_ = 0x2545F4914F6CDD1DULL;
  long iterations_ = 0;
  long limit_ = 0;
  long run_start_ = 0;
  bool phase2_ = false;
  LpStatus status_ = LpStatus::kInfeasible;
};

}  // namespace sscopt::milp

#endif  // SSCOPT_MILP_SIMPLEX_HPP_
