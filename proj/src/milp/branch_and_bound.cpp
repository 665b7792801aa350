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

#include "sscopt/milp/branch_and_bound.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>

namespace sscopt::milp {

const char* to_string(MilpStatus s) {
  switch (s) {
    case MilpStatus::kOptimal: return "Optimal";
    case MilpStatus::kFeasible: return "Feasible";
    case MilpStatus::kInfeasible: return "Infeasible";
    case MilpStatus::kUnbounded: return "Unbounded";
    case MilpStatus::kTimeLimit: return "TimeLimit";
  }
  return "?";
}

MilpStatus milp_status_from_string(const std::string& s) {
  for (MilpStatus st : {MilpStatus::kOptimal, MilpStatus::kFeasible, MilpStatus::kInfeasible,
                        MilpStatus::kUnbounded, MilpStatus::kTimeLimit}) {
    if (s == to_string(st)) return st;
  }
  throw ModelError("unknown solver status " + s);
}

namespace {

// Bound changes for the integral variables only.
struct Node {
  double bound;
  long seq;
  std::vector<double> lo;
  std::vector<double> up;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.seq > b.seq;
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const Model& model, const LinObjective& objective, const MilpOptions& options)
      : model_(model), objective_(objective), options_(options) {
    for (std::size_t j = 0; j < model.num_vars(); ++j) {
      if (model.var(static_cast<int>(j)).is_integral()) ints_.push_back(static_cast<int>(j));
    }
    cols_.resize(model.num_vars());
    for (std::size_t i = 0; i < model.num_constraints(); ++i) {
      for (const LinTerm& t : model.constraint(static_cast<int>(i)).terms) {
        cols_[t.var].push_back({static_cast<int>(i), t.coef});
      }
    }
    cost_.assign(model.num_vars(), 0.0);
    for (const LinTerm& t : objective.terms) cost_[t.var] += t.coef;
    start_ = Clock::now();
    if (std::isfinite(options.time_limit_s)) {
      deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(options.time_limit_s));
    }
  }

  MilpResult run();

 private:
  double gap_tol(double inc) const {
    return (options_.rel_gap + 1e-9) * std::max(1.0, std::abs(inc));
  }
  bool timed_out() const { return deadline_ && Clock::now() >= *deadline_; }
  void apply(const Node& node, std::vector<double>* lo, std::vector<double>* up) const;
  // Index into ints_ of the most fractional variable, -1 if integral.
  int pick_branch(const std::vector<double>& x) const;
  void offer(std::vector<double> x);
  void round_and_offer(const std::vector<double>& lp);
  void dive(const SimplexEngine& from, std::vector<double> lo, std::vector<double> up);
  MilpResult finish(MilpStatus status, double bound);

  const Model& model_;
  const LinObjective& objective_;
  MilpOptions options_;
  std::vector<int> ints_;
  std::vector<std::vector<LinTerm>> cols_;  // var -> (row, coef)
  std::vector<double> cost_;
  std::set<std::string> tried_patterns_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  std::vector<double> incumbent_;
  double inc_value_ = kInf;
  long nodes_ = 0;
  long lp_iterations_ = 0;
};

void BranchAndBound::apply(const Node& node, std::vector<double>* lo,
                           std::vector<double>* up) const {
  for (std::size_t k = 0; k < ints_.size(); ++k) {
    (*lo)[ints_[k]] = node.lo[k];
    (*up)[ints_[k]] = node.up[k];
  }
}

int BranchAndBound::pick_branch(const std::vector<double>& x) const {
  // Binaries first: once they settle, general integers (counts, fleet sizes)
  // usually sit close to their relaxed values.
  int best = -1;
  bool best_binary = false;
  double best_frac = kIntTol;
  for (std::size_t k = 0; k < ints_.size(); ++k) {
    const double v = x[ints_[k]];
    const double f = v - std::floor(v);
    const double dist = std::min(f, 1.0 - f);
    if (dist <= kIntTol) continue;
    const bool binary = model_.var(ints_[k]).domain == VarDomain::kBinary;
    if (binary < best_binary) continue;
    if (binary > best_binary || dist > best_frac) {
      best_frac = dist;
      best = static_cast<int>(k);
      best_binary = binary;
    }
  }
  return best;
}

void BranchAndBound::offer(std::vector<double> x) {
  for (int j : ints_) x[j] = std::round(x[j]);
  if (!model_.check_feasible(x).empty()) {
    // Rounding drifted off a row; re-solve the continuous part exactly.
    std::map<int, double> fixes;
    for (int j : ints_) fixes[j] = x[j];
    Model fixed;
    try {
      fixed = fix_variables(model_, fixes);
    } catch (const DomainError&) {
      return;
    }
    SimplexOptions lp = options_.lp;
    lp.deadline = deadline_;
    LpResult res = solve_lp(fixed, objective_, lp);
    lp_iterations_ += res.iterations;
    if (res.status != LpStatus::kOptimal) return;
    x = res.x;
    for (int j : ints_) x[j] = std::round(x[j]);
    if (!model_.check_feasible(x).empty()) return;
  }
  const double value = objective_.evaluate(x);
  if (value < inc_value_) {
    inc_value_ = value;
    incumbent_ = std::move(x);
  }
}

// Rounds each fractional integer in a direction that keeps every row it
// touches satisfied. When that fails but the binaries are already integral,
// rounds the general integers up and lets offer() re-solve the continuous
// part, once per binary pattern.
void BranchAndBound::round_and_offer(const std::vector<double>& lp) {
  std::vector<double> act(model_.num_constraints(), 0.0);
  for (std::size_t i = 0; i < act.size(); ++i) {
    for (const LinTerm& t : model_.constraint(static_cast<int>(i)).terms) act[i] += t.coef * lp[t.var];
  }
  auto fits = [&](int j, double delta) {
    for (const LinTerm& e : cols_[j]) {
      const LinConstraint& r = model_.constraint(e.var);
      const double a = act[e.var] + e.coef * delta;
      const double tol = 1e-7 * std::max(1.0, std::abs(r.rhs));
      if (r.sense != Sense::kGreaterEqual && a > r.rhs + tol) return false;
      if (r.sense != Sense::kLessEqual && a < r.rhs - tol) return false;
    }
    return true;
  };
  std::vector<double> x = lp;
  bool ok = true;
  for (int j : ints_) {
    const double v = x[j];
    if (std::abs(v - std::round(v)) <= kIntTol) continue;
    const double down = std::floor(v), up = std::ceil(v);
    const double first = cost_[j] > 0.0 ? down : up;
    bool placed = false;
    for (double target : {first, first == down ? up : down}) {
      if (!fits(j, target - v)) continue;
      for (const LinTerm& e : cols_[j]) act[e.var] += e.coef * (target - v);
      x[j] = target;
      placed = true;
      break;
    }
    if (!placed) {
      ok = false;
      break;
    }
  }
  if (ok) {
    offer(std::move(x));
    return;
  }
  std::string pattern;
  for (int j : ints_) {
    if (model_.var(j).domain != VarDomain::kBinary) continue;
    if (std::abs(lp[j] - std::round(lp[j])) > kIntTol) return;
    pattern.push_back(lp[j] > 0.5 ? '1' : '0');
  }
  if (!tried_patterns_.insert(pattern).second) return;
  x = lp;
  for (int j : ints_) x[j] = model_.var(j).domain == VarDomain::kBinary ? std::round(x[j]) : std::ceil(x[j] - kIntTol);
  offer(std::move(x));
}

void BranchAndBound::dive(const SimplexEngine& from, std::vector<double> lo,
                          std::vector<double> up) {
  SimplexEngine engine = from;
  const long before = engine.iterations();
  const std::size_t max_depth = 2 * ints_.size() + 1;
  for (std::size_t depth = 0; depth < max_depth && !timed_out(); ++depth) {
    std::vector<double> x = engine.solution();
    if (engine.objective_value() >= inc_value_ - gap_tol(inc_value_)) break;
    // Fix the fractional variable closest to an integer.
    int pick = -1;
    double pick_dist = 1.0;
    for (std::size_t k = 0; k < ints_.size(); ++k) {
      const double v = x[ints_[k]];
      const double dist = std::abs(v - std::round(v));
      if (dist > kIntTol && dist < pick_dist) {
        pick_dist = dist;
        pick = static_cast<int>(k);
      }
    }
    if (pick < 0) {
      offer(std::move(x));
      break;
    }
    const int j = ints_[pick];
    const double near = std::round(x[j]);
    const double far = near > x[j] ? std::floor(x[j]) : std::ceil(x[j]);
    bool ok = false;
    for (double target : {near, far}) {
      std::vector<double> lo2 = lo, up2 = up;
      lo2[j] = up2[j] = target;
      if (target < lo[j] || target > up[j]) continue;
      if (engine.reoptimize_bounds(lo2, up2) == LpStatus::kOptimal) {
        lo = std::move(lo2);
        up = std::move(up2);
        ok = true;
        break;
      }
    }
    if (!ok) break;
  }
  lp_iterations_ += engine.iterations() - before;
}

MilpResult BranchAndBound::finish(MilpStatus status, double bound) {
  MilpResult r;
  r.status = status;
  r.nodes = nodes_;
  r.lp_iterations = lp_iterations_;
  r.time_s = std::chrono::duration<double>(Clock::now() - start_).count();
  if (!incumbent_.empty()) {
    r.assignment = incumbent_;
    r.objective = inc_value_;
    r.best_bound = std::min(bound, inc_value_);
    r.rel_gap = std::max(0.0, inc_value_ - r.best_bound) / std::max(1.0, std::abs(inc_value_));
  } else {
    r.best_bound = bound;
  }
  return r;
}

MilpResult BranchAndBound::run() {
  SimplexOptions lp = options_.lp;
  lp.deadline = deadline_;
  SimplexEngine engine(model_, objective_, lp);
  LpStatus st = engine.solve();
  lp_iterations_ = engine.iterations();
  if (st == LpStatus::kInfeasible) return finish(MilpStatus::kInfeasible, kInf);
  if (st == LpStatus::kUnbounded) return finish(MilpStatus::kUnbounded, -kInf);
  if (st != LpStatus::kOptimal) return finish(MilpStatus::kTimeLimit, -kInf);

  const std::size_t n = model_.num_vars();
  std::vector<double> root_lo(n), root_up(n);
  for (std::size_t j = 0; j < n; ++j) {
    root_lo[j] = model_.var(static_cast<int>(j)).lower;
    root_up[j] = model_.var(static_cast<int>(j)).upper;
    if (model_.var(static_cast<int>(j)).is_integral()) {
      root_lo[j] = std::ceil(root_lo[j] - kIntTol);
      root_up[j] = std::floor(root_up[j] + kIntTol);
    }
  }

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  long seq = 0;
  {
    Node root{-kInf, seq++, {}, {}};
    for (int j : ints_) {
      root.lo.push_back(root_lo[j]);
      root.up.push_back(root_up[j]);
    }
    open.push(std::move(root));
  }
  double pruned_bound = kInf;
  std::vector<double> lo = root_lo, up = root_up;
  long last_dive = 0;

  while (!open.empty()) {
    const double global = std::min(open.top().bound, pruned_bound);
    if (inc_value_ < kInf && inc_value_ - global <= gap_tol(inc_value_)) {
      return finish(MilpStatus::kOptimal, global);
    }
    if (timed_out()) return finish(MilpStatus::kTimeLimit, global);
    if (options_.node_limit > 0 && nodes_ >= options_.node_limit) {
      return finish(incumbent_.empty() ? MilpStatus::kTimeLimit : MilpStatus::kFeasible, global);
    }
    Node node = open.top();
    open.pop();
    if (node.bound >= inc_value_ - gap_tol(inc_value_)) {
      pruned_bound = std::min(pruned_bound, node.bound);
      continue;
    }
    ++nodes_;
    apply(node, &lo, &up);
    {
      const long before = engine.iterations();
      st = engine.reoptimize_bounds(lo, up);
      lp_iterations_ += engine.iterations() - before;
    }
    if (st == LpStatus::kTimeLimit) {
      open.push(std::move(node));
      return finish(MilpStatus::kTimeLimit, std::min(open.top().bound, pruned_bound));
    }
    if (st != LpStatus::kOptimal) continue;
    const double value = engine.objective_value();
    if (value >= inc_value_ - gap_tol(inc_value_)) {
      pruned_bound = std::min(pruned_bound, value);
      continue;
    }
    std::vector<double> x = engine.solution();
    const int k = pick_branch(x);
    if (k < 0) {
      offer(std::move(x));
      continue;
    }
    round_and_offer(x);
    if (value >= inc_value_ - gap_tol(inc_value_)) {
      pruned_bound = std::min(pruned_bound, value);
      continue;
    }
    if (options_.diving && (nodes_ == 1 || nodes_ - last_dive >= (incumbent_.empty() ? 200 : 1000))) {
      last_dive = nodes_;
      dive(engine, lo, up);
      if (value >= inc_value_ - gap_tol(inc_value_)) {
        pruned_bound = std::min(pruned_bound, value);
        continue;
      }
    }
    const double v = x[ints_[k]];
    Node down{value, seq++, node.lo, node.up};
    down.up[k] = std::floor(v);
    Node upn{value, seq++, std::move(node.lo), std::move(node.up)};
    upn.lo[k] = std::ceil(v);
    open.push(std::move(down));
    open.push(std::move(upn));
  }
  if (incumbent_.empty()) return finish(MilpStatus::kInfeasible, kInf);
  return finish(MilpStatus::kOptimal, std::min(pruned_bound, inc_value_));
}

}  // namespace

MilpResult solve_milp(const Model& model, const LinObjective& objective,
                      const MilpOptions& options) {
  BranchAndBound bnb(model, objective, options);
  return bnb.run();
}

}  // namespace sscopt::milp
