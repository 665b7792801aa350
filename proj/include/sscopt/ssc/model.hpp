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

#ifndef SSCOPT_SSC_MODEL_HPP_
#define SSCOPT_SSC_MODEL_HPP_

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sscopt/milp/model.hpp"
#include "sscopt/ssc/instance.hpp"

namespace sscopt::ssc {

// A directed arc usable by one transport mode, with the items it may carry.
struct Lane {
  int mode = 0;
  int from = 0;
  int to = 0;
  std::vector<int> items;
};

// Index maps from domain tuples to model columns. Lookups return -1 when the
// tuple has no variable (for example X on an arc the mode cannot serve).
class VariableCatalog {
 public:
  std::vector<Lane> lanes;

  int x(int item, int mode, int i, int j, int t) const { return get(x_, {item, mode, i, j, t}); }
  int q(int mode, int i, int j, int t) const { return get(q_, {mode, i, j, t}); }
  int s(int product, int i, int t) const { return get(s_, {product, i, t}); }
  int p(int product, int tech, int i, int t) const { return get(p_, {product, tech, i, t}); }
  int r(int product, int tech, int i, int t) const { return get(r_, {product, tech, i, t}); }
  int z(int tech, int product, int i) const { return get(z_, {tech, product, i}); }
  int y(int i) const { return get(y_, {i}); }
  int yc(int i) const { return get(yc_, {i}); }
  int yct(int i, int t) const { return get(yct_, {i, t}); }
  int k(int mode, int i) const { return get(k_, {mode, i}); }
  int kt(int mode, int i, int t) const { return get(kt_, {mode, i, t}); }

  // Every X column (used by the null-flow fixing heuristic).
  const std::vector<int>& flow_vars() const { return flow_vars_; }
  // Truck trip columns keyed by (mode, i, j, t).
  const std::map<std::array<int, 4>, int>& trip_vars() const { return q_; }
  const std::map<std::array<int, 2>, int>& fleet_vars() const { return k_; }
  const std::map<std::array<int, 3>, int>& tech_vars() const { return z_; }
  const std::map<std::array<int, 1>, int>& install_vars() const { return y_; }

 private:
  friend class ModelBuilder;

  template <std::size_t N>
  static int get(const std::map<std::array<int, N>, int>& m, const std::array<int, N>& key) {
    auto it = m.find(key);
    return it == m.end() ? -1 : it->second;
  }

  std::map<std::array<int, 5>, int> x_;
  std::map<std::array<int, 4>, int> q_;
  std::map<std::array<int, 3>, int> s_;
  std::map<std::array<int, 4>, int> p_;
  std::map<std::array<int, 4>, int> r_;
  std::map<std::array<int, 3>, int> z_;
  std::map<std::array<int, 1>, int> y_;
  std::map<std::array<int, 1>, int> yc_;
  std::map<std::array<int, 2>, int> yct_;
  std::map<std::array<int, 2>, int> k_;
  std::map<std::array<int, 3>, int> kt_;
  std::vector<int> flow_vars_;
};

// Three minimization objectives over one constraint set. Relaxable rows are
// the ones linking continuous and integer decisions to installation binaries;
// relaxed_binaries lists those binaries (the Y columns).
struct TriObjectiveModel {
  milp::Model model;
  milp::LinObjective f_eco;  // minus net present value
  milp::LinObjective f_env;  // environmental impact
  milp::LinObjective f_soc;  // minus social benefit
  VariableCatalog catalog;
  std::vector<int> relaxed_binaries;

  const milp::LinObjective& objective(int k) const {
    return k == 0 ? f_eco : k == 1 ? f_env : f_soc;
  }
};

struct ObjectiveValues {
  double f_eco = 0.0;
  double f_env = 0.0;
  double f_soc = 0.0;

  double operator[](int k) const { return k == 0 ? f_eco : k == 1 ? f_env : f_soc; }
  // Original sense: NPV, impact, social benefit.
  double eco_prime() const { return -f_eco; }
  double env_prime() const { return f_env; }
  double soc_prime() const { return -f_soc; }
};

ObjectiveValues evaluate_objectives(const TriObjectiveModel& tm, std::span<const double> x);

// Arcs by mode and item class; see the README for the topology.
std::vector<Lane> build_lanes(const SSCInstance& inst);

// Per-lane trip cap and per-sender fleet cap derived from entity throughput.
double trip_big_m(const SSCInstance& inst, const Lane& lane);

// Compiles the instance: catalog, kept rows, relaxable rows, objectives.
TriObjectiveModel build_model(const SSCInstance& inst);

// Adds the kept block to tm.model; each row label starts with "rec_".
void build_tactical_constraints(const SSCInstance& inst, TriObjectiveModel& tm);
// Adds the relaxable block to tm.model.
void build_strategic_constraints(const SSCInstance& inst, TriObjectiveModel& tm);
void build_objectives(const SSCInstance& inst, TriObjectiveModel& tm);

struct Violation {
  std::string label;  // row label or variable id
  double amount = 0.0;
};

// Every violated row or bound; empty iff feasible within tol.
std::vector<Violation> validate_solution(const milp::Model& model, std::span<const double> x,
                                         double tol = milp::kFeasTol);

}  // namespace sscopt::ssc

#endif  // SSCOPT_SSC_MODEL_HPP_
