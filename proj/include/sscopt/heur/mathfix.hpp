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

// Fixing matheuristic: solve the loosened relaxation, fix the design the
// relaxed flows use, bound truck trips and fleets from below, then solve the
// restricted problem exactly.

#ifndef SSCOPT_HEUR_MATHFIX_HPP_
#define SSCOPT_HEUR_MATHFIX_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sscopt/grid/mono.hpp"

namespace sscopt::heur {

// Fewest trips that carry weight_kg at vcap_kg per trip.
double trip_lower_bound(double weight_kg, double vcap_kg);
// Fewest vehicles that make trips at ntrips per vehicle.
double fleet_lower_bound(double trips, double ntrips);

struct FixOptions {
  double positive_tol = 1e-6;
  milp::MilpOptions milp = [] {
    milp::MilpOptions o;
    o.rel_gap = 1e-4;
    return o;
  }();
};

// Installation binaries fixed to 1 by a point of the relaxation: those
// positive there and those whose relaxable row would be violated at 0. The
// rest stay free.
std::map<int, double> implied_binary_fixes(const milp::Model& model, const std::vector<int>& install,
                                           std::span<const double> x, double tol);

// Lower bounds on truck trip and fleet columns from the relaxed flows,
// capped by each column's upper bound.
std::map<int, double> transport_lower_bounds(const grid::MonoProblem& problem, std::span<const double> x,
                                             double tol);

// The subproblem with the fixes and, optionally, the transport lower bounds.
milp::Model restrict_problem(const grid::MonoProblem& problem, std::span<const double> relaxed, double tol,
                             bool transport_bounds = true);

class MathFix : public grid::MonoSolver {
 public:
  explicit MathFix(FixOptions options = {}) : options_(options) {}
  std::string name() const override { return "fix"; }
  grid::MonoResult solve(const grid::MonoProblem& problem) const override;

 private:
  FixOptions options_;
};

}  // namespace sscopt::heur

#endif  // SSCOPT_HEUR_MATHFIX_HPP_
