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

// Slow reference solvers used only by tests.

#ifndef SSCOPT_TESTS_ORACLES_HPP_
#define SSCOPT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "sscopt/milp/model.hpp"
#include "sscopt/milp/simplex.hpp"

namespace sscopt::testing {

// Optimum of a bounded LP by trying every vertex: each choice of n tight
// constraints (rows or finite bounds) is solved by Gaussian elimination.
// Exponential; meant for n <= 4.
inline std::optional<double> vertex_enumeration_lp(const milp::Model& m,
                                                   const milp::LinObjective& obj) {
  const int n = static_cast<int>(m.num_vars());
  struct Plane {
    std::vector<double> a;
    double b;
  };
  std::vector<Plane> planes;
  for (const auto& r : m.constraints()) {
    Plane p{std::vector<double>(n, 0.0), r.rhs};
    for (const auto& t : r.terms) p.a[t.var] = t.coef;
    planes.push_back(p);
  }
  for (int j = 0; j < n; ++j) {
    Plane lo{std::vector<double>(n, 0.0), m.var(j).lower};
    lo.a[j] = 1.0;
    planes.push_back(lo);
    if (std::isfinite(m.var(j).upper)) {
      Plane up{std::vector<double>(n, 0.0), m.var(j).upper};
      up.a[j] = 1.0;
      planes.push_back(up);
    }
  }
  const int k = static_cast<int>(planes.size());
  std::optional<double> best;
  std::vector<int> pick(n);
  // Iterate over all n-subsets.
  std::vector<bool> sel(k, false);
  std::fill(sel.begin(), sel.begin() + std::min(n, k), true);
  if (n > k) return std::nullopt;
  do {
    int c = 0;
    for (int i = 0; i < k; ++i) if (sel[i]) pick[c++] = i;
    std::vector<std::vector<double>> A(n, std::vector<double>(n + 1));
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j < n; ++j) A[r][j] = planes[pick[r]].a[j];
      A[r][n] = planes[pick[r]].b;
    }
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = col;
      for (int r = col + 1; r < n; ++r) if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
      if (std::abs(A[piv][col]) < 1e-12) {
        singular = true;
        break;
      }
      std::swap(A[piv], A[col]);
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        const double f = A[r][col] / A[col][col];
        for (int j = col; j <= n; ++j) A[r][j] -= f * A[col][j];
      }
    }
    if (singular) continue;
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = A[j][n] / A[j][j];
    // Integrality is ignored here: rows and bounds only.
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = x[j] >= m.var(j).lower - 1e-9 && x[j] <= m.var(j).upper + 1e-9;
    for (const auto& r : m.constraints()) {
      if (ok) ok = r.violation(x) <= 1e-9 * std::max(1.0, std::abs(r.rhs));
    }
    if (!ok) continue;
    const double v = obj.evaluate(x);
    if (!best || v < *best) best = v;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return best;
}

// Optimum of a MILP with few small-domain integral variables: every integer
// assignment is fixed and the remaining LP solved.
inline std::optional<double> enumeration_milp(const milp::Model& m, const milp::LinObjective& obj) {
  std::vector<int> ints;
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    if (m.var(static_cast<int>(j)).is_integral()) ints.push_back(static_cast<int>(j));
  }
  std::vector<double> value(ints.size());
  std::optional<double> best;
  for (std::size_t k = 0; k < ints.size(); ++k) value[k] = std::ceil(m.var(ints[k]).lower - 1e-9);
  for (;;) {
    std::map<int, double> fixes;
    for (std::size_t k = 0; k < ints.size(); ++k) fixes[ints[k]] = value[k];
    milp::Model fixed = milp::fix_variables(m, fixes);
    milp::LpResult r = milp::solve_lp(fixed, obj);
    if (r.status == milp::LpStatus::kOptimal && (!best || r.objective < *best)) best = r.objective;
    std::size_t k = 0;
    for (; k < ints.size(); ++k) {
      value[k] += 1.0;
      if (value[k] <= m.var(ints[k]).upper + 1e-9) break;
      value[k] = std::ceil(m.var(ints[k]).lower - 1e-9);
    }
    if (k == ints.size()) break;
  }
  return best;
}

// Random bounded MILP with n_int integral (domain 0..3 or binary) and
// n_cont continuous variables, all in a box so the LP is bounded.
inline std::pair<milp::Model, milp::LinObjective> random_milp(std::mt19937_64& rng, int n_int,
                                                              int n_cont, int n_rows) {
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_int_distribution<int> pick(0, 2);
  milp::Model m;
  for (int j = 0; j < n_int; ++j) {
    if (pick(rng) == 0) {
      m.add_var("b" + std::to_string(j), milp::VarDomain::kBinary, 0.0, 1.0);
    } else {
      m.add_var("z" + std::to_string(j), milp::VarDomain::kInteger, 0.0, 3.0);
    }
  }
  for (int j = 0; j < n_cont; ++j) m.add_var("x" + std::to_string(j), milp::VarDomain::kContinuous, 0.0, 4.0);
  const int n = n_int + n_cont;
  for (int i = 0; i < n_rows; ++i) {
    milp::LinConstraint r;
    for (int j = 0; j < n; ++j) {
      if (pick(rng) == 0) continue;
      double c = std::round(coef(rng) * 4.0) / 4.0;
      r.terms.push_back({j, c == 0.0 ? 0.25 : c});
    }
    if (r.terms.empty()) r.terms.push_back({i % n, 1.0});
    const int s = pick(rng);
    r.sense = s == 0 ? milp::Sense::kLessEqual : s == 1 ? milp::Sense::kGreaterEqual : milp::Sense::kLessEqual;
    // Keep the all-ones-ish point near feasibility so most instances are feasible.
    double at_one = 0.0;
    for (const auto& t : r.terms) at_one += t.coef;
    r.rhs = r.sense == milp::Sense::kLessEqual ? at_one + std::abs(coef(rng)) : at_one - std::abs(coef(rng));
    r.label = "c" + std::to_string(i);
    m.add_constraint(r);
  }
  milp::LinObjective o;
  for (int j = 0; j < n; ++j) o.terms.push_back({j, std::round(coef(rng) * 8.0) / 8.0});
  return {m, o};
}

}  // namespace sscopt::testing

#endif  // SSCOPT_TESTS_ORACLES_HPP_
