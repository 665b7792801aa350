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

#include "sscopt/milp/simplex.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

namespace sscopt::milp {
namespace {

constexpr double kDropTol = 1e-13;
constexpr int kStallPivots = 50;
constexpr int kRefactorEvery = 64;
constexpr int kMaxPerturbRounds = 3;

double pow2_round(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) return 1.0;
  return std::ldexp(1.0, static_cast<int>(std::lround(std::log2(v))));
}

}  // namespace

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration_limit";
    case LpStatus::kTimeLimit: return "time_limit";
  }
  return "?";
}

SimplexEngine::SimplexEngine(const Model& model, const LinObjective& objective,
                             SimplexOptions options)
    : options_(options) {
  m_ = static_cast<int>(model.num_constraints());
  n_ = static_cast<int>(model.num_vars());
  orig_lo_.resize(n_);
  orig_up_.resize(n_);
  for (int j = 0; j < n_; ++j) {
    orig_lo_[j] = model.var(j).lower;
    orig_up_[j] = model.var(j).upper;
  }
  compute_scaling(model);
  set_cost(objective);
  limit_ = options_.max_iterations > 0 ? options_.max_iterations
                                       : 200L * (m_ + n_) + 10000;
}

void SimplexEngine::compute_scaling(const Model& model) {
  row_scale_.assign(m_, 1.0);
  col_scale_.assign(n_, 1.0);
  senses_.resize(m_);
  rhs_.resize(m_);
  for (int pass = 0; pass < 4; ++pass) {
    for (int i = 0; i < m_; ++i) {
      double lo = kInf, hi = 0.0;
      for (const LinTerm& t : model.constraint(i).terms) {
        const double v = std::abs(t.coef) * col_scale_[t.var];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (hi > 0.0) row_scale_[i] = 1.0 / std::sqrt(lo * hi);
    }
    std::vector<double> lo(n_, kInf), hi(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (const LinTerm& t : model.constraint(i).terms) {
        const double v = std::abs(t.coef) * row_scale_[i];
        lo[t.var] = std::min(lo[t.var], v);
        hi[t.var] = std::max(hi[t.var], v);
      }
    }
    for (int j = 0; j < n_; ++j) {
      if (hi[j] > 0.0) col_scale_[j] = 1.0 / std::sqrt(lo[j] * hi[j]);
    }
  }
  for (double& s : row_scale_) s = pow2_round(s);
  for (double& s : col_scale_) s = pow2_round(s);

  std::vector<int> count(n_ + 1, 0);
  for (int i = 0; i < m_; ++i) {
    for (const LinTerm& t : model.constraint(i).terms) ++count[t.var + 1];
  }
  col_start_.assign(n_ + 1, 0);
  for (int j = 0; j < n_; ++j) col_start_[j + 1] = col_start_[j] + count[j + 1];
  col_row_.resize(col_start_[n_]);
  col_val_.resize(col_start_[n_]);
  std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
  for (int i = 0; i < m_; ++i) {
    const LinConstraint& row = model.constraint(i);
    for (const LinTerm& t : row.terms) {
      const int k = fill[t.var]++;
      col_row_[k] = i;
      col_val_[k] = t.coef * row_scale_[i] * col_scale_[t.var];
    }
    senses_[i] = row.sense;
    rhs_[i] = row.rhs * row_scale_[i];
  }
}

void SimplexEngine::set_cost(const LinObjective& objective) {
  orig_cost_ = objective.dense(n_);
  obj_constant_ = objective.constant;
  double hi = 0.0;
  for (int j = 0; j < n_; ++j) hi = std::max(hi, std::abs(orig_cost_[j] * col_scale_[j]));
  obj_scale_ = hi > 0.0 ? pow2_round(1.0 / hi) : 1.0;
}

struct SimplexEngine::LuFactor {
  // transpose() is non-const in Eigen even though solving does not mutate.
  mutable Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
};

void SimplexEngine::initialize() {
  lo_.assign(n_ + m_, 0.0);
  up_.assign(n_ + m_, 0.0);
  x_.assign(n_ + m_, 0.0);
  at_upper_.assign(n_ + m_, 0);
  for (int j = 0; j < n_; ++j) {
    lo_[j] = orig_lo_[j] / col_scale_[j];
    up_[j] = orig_up_[j] / col_scale_[j];
    if (std::isfinite(lo_[j])) {
      x_[j] = lo_[j];
    } else if (std::isfinite(up_[j])) {
      x_[j] = up_[j];
      at_upper_[j] = 1;
    }
  }
  for (int i = 0; i < m_; ++i) {
    switch (senses_[i]) {
      case Sense::kLessEqual: lo_[n_ + i] = 0.0; up_[n_ + i] = kInf; break;
      case Sense::kGreaterEqual: lo_[n_ + i] = -kInf; up_[n_ + i] = 0.0; at_upper_[n_ + i] = 1; break;
      case Sense::kEqual: lo_[n_ + i] = 0.0; up_[n_ + i] = 0.0; break;
    }
  }
  // Residual left for each row's logical column; rows whose slack cannot
  // absorb it get an artificial.
  std::vector<double> resid(rhs_);
  for (int j = 0; j < n_; ++j) {
    if (x_[j] == 0.0) continue;
    for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) resid[col_row_[k]] -= col_val_[k] * x_[j];
  }
  art_row_.clear();
  art_sign_.clear();
  basis_.assign(m_, -1);
  const double tol = options_.primal_tol;
  for (int i = 0; i < m_; ++i) {
    const int s = n_ + i;
    if (resid[i] >= lo_[s] - tol && resid[i] <= up_[s] + tol) {
      basis_[i] = s;
      x_[s] = resid[i];
    } else {
      art_row_.push_back(i);
      art_sign_.push_back(resid[i] < 0.0 ? -1.0 : 1.0);
    }
  }
  const int nart = static_cast<int>(art_row_.size());
  ncol_ = n_ + m_ + nart;
  lo_.resize(ncol_, 0.0);
  up_.resize(ncol_, kInf);
  x_.resize(ncol_, 0.0);
  at_upper_.resize(ncol_, 0);
  for (int k = 0; k < nart; ++k) {
    const int i = art_row_[k];
    basis_[i] = n_ + m_ + k;
    x_[n_ + m_ + k] = std::abs(resid[i]);
  }
  where_.assign(ncol_, -1);
  for (int i = 0; i < m_; ++i) where_[basis_[i]] = i;
  cost_.assign(ncol_, 0.0);
  for (int j = 0; j < n_; ++j) cost_[j] = orig_cost_[j] * col_scale_[j] * obj_scale_;
  refactor();
  phase2_ = false;
}

bool SimplexEngine::refactor() {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(m_) * 3);
  for (int i = 0; i < m_; ++i) {
    const int j = basis_[i];
    if (j < n_) {
      for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) trip.emplace_back(col_row_[k], i, col_val_[k]);
    } else if (j < n_ + m_) {
      trip.emplace_back(j - n_, i, 1.0);
    } else {
      const int a = j - n_ - m_;
      trip.emplace_back(art_row_[a], i, art_sign_[a]);
    }
  }
  Eigen::SparseMatrix<double> b(m_, m_);
  b.setFromTriplets(trip.begin(), trip.end());
  b.makeCompressed();
  auto f = std::make_shared<LuFactor>();
  f->lu.analyzePattern(b);
  f->lu.factorize(b);
  etas_.clear();
  if (f->lu.info() != Eigen::Success) {
    lu_.reset();
    return false;
  }
  lu_ = std::move(f);
  return true;
}

void SimplexEngine::ftran(std::vector<double>& v) const {
  Eigen::Map<Eigen::VectorXd> vm(v.data(), m_);
  vm = lu_->lu.solve(vm);
  for (const Eta& e : etas_) {
    const double vr = v[e.row] / e.pivot;
    v[e.row] = vr;
    if (vr == 0.0) continue;
    for (std::size_t k = 0; k < e.idx.size(); ++k) v[e.idx[k]] -= e.val[k] * vr;
  }
}

void SimplexEngine::btran(std::vector<double>& v) const {
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    double s = v[it->row];
    for (std::size_t k = 0; k < it->idx.size(); ++k) s -= it->val[k] * v[it->idx[k]];
    v[it->row] = s / it->pivot;
  }
  Eigen::Map<Eigen::VectorXd> vm(v.data(), m_);
  vm = lu_->lu.transpose().solve(vm);
}

void SimplexEngine::load_column(int j, std::vector<double>& v) const {
  std::fill(v.begin(), v.end(), 0.0);
  if (j < n_) {
    for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) v[col_row_[k]] = col_val_[k];
  } else if (j < n_ + m_) {
    v[j - n_] = 1.0;
  } else {
    v[art_row_[j - n_ - m_]] = art_sign_[j - n_ - m_];
  }
}

double SimplexEngine::dot_column(int j, const std::vector<double>& y) const {
  if (j < n_) {
    double s = 0.0;
    for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) s += col_val_[k] * y[col_row_[k]];
    return s;
  }
  if (j < n_ + m_) return y[j - n_];
  return art_sign_[j - n_ - m_] * y[art_row_[j - n_ - m_]];
}

// Row r of B^-1 A over the nonbasic columns; basic entries are left 0.
void SimplexEngine::pivot_row(int r, std::vector<double>& alpha) const {
  std::vector<double> rho(m_, 0.0);
  rho[r] = 1.0;
  btran(rho);
  alpha.assign(ncol_, 0.0);
  for (int j = 0; j < ncol_; ++j) {
    if (where_[j] >= 0) continue;
    const double a = dot_column(j, rho);
    if (std::abs(a) > kDropTol) alpha[j] = a;
  }
}

void SimplexEngine::compute_reduced_costs(const std::vector<double>& cost) {
  std::vector<double> y(m_);
  for (int i = 0; i < m_; ++i) y[i] = cost[basis_[i]];
  btran(y);
  d_.assign(ncol_, 0.0);
  for (int j = 0; j < ncol_; ++j) {
    if (where_[j] < 0) d_[j] = cost[j] - dot_column(j, y);
  }
}

void SimplexEngine::compute_basic_values() {
  std::vector<double> v(rhs_);
  for (int j = 0; j < ncol_; ++j) {
    if (where_[j] >= 0 || x_[j] == 0.0) continue;
    if (j < n_) {
      for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) v[col_row_[k]] -= col_val_[k] * x_[j];
    } else if (j < n_ + m_) {
      v[j - n_] -= x_[j];
    } else {
      v[art_row_[j - n_ - m_]] -= art_sign_[j - n_ - m_] * x_[j];
    }
  }
  ftran(v);
  for (int i = 0; i < m_; ++i) x_[basis_[i]] = v[i];
}

// Fresh LU, basic values and reduced costs; false on a singular basis.
bool SimplexEngine::refresh(const std::vector<double>& cost) {
  if (!refactor()) return false;
  compute_basic_values();
  compute_reduced_costs(cost);
  return true;
}

void SimplexEngine::change_basis(int r, int q, const std::vector<double>& column,
                                 const std::vector<double>& row) {
  const double piv = column[r];
  const double dq = d_[q];
  if (dq != 0.0) {
    const double f = dq / piv;
    for (int j = 0; j < ncol_; ++j) {
      if (row[j] != 0.0) d_[j] -= f * row[j];
    }
  }
  const int leaving = basis_[r];
  d_[leaving] = -dq / piv;
  d_[q] = 0.0;
  Eta e;
  e.row = r;
  e.pivot = piv;
  for (int i = 0; i < m_; ++i) {
    if (i != r && std::abs(column[i]) > kDropTol) {
      e.idx.push_back(i);
      e.val.push_back(column[i]);
    }
  }
  etas_.push_back(std::move(e));
  where_[leaving] = -1;
  basis_[r] = q;
  where_[q] = r;
  ++iterations_;
}

bool SimplexEngine::budget_exhausted(LpStatus* why) {
  if (iterations_ - run_start_ >= limit_) {
    *why = LpStatus::kIterationLimit;
    return true;
  }
  if (options_.deadline && (iterations_ & 15) == 0 && Clock::now() >= *options_.deadline) {
    *why = LpStatus::kTimeLimit;
    return true;
  }
  return false;
}

int SimplexEngine::choose_entering(bool stalled) const {
  const double tol = options_.dual_tol;
  const bool bland = options_.pricing == PricingRule::kBland || stalled;
  int best = -1;
  double best_score = 0.0;
  for (int j = 0; j < ncol_; ++j) {
    if (where_[j] >= 0 || lo_[j] == up_[j]) continue;
    const double dj = d_[j];
    const bool free = !std::isfinite(lo_[j]) && !std::isfinite(up_[j]);
    const bool improving = free ? std::abs(dj) > tol : at_upper_[j] ? dj > tol : dj < -tol;
    if (!improving) continue;
    if (bland) return j;
    if (std::abs(dj) > best_score) {
      best_score = std::abs(dj);
      best = j;
    }
  }
  return best;
}

// Deterministic draw in [1, 2) from a xorshift stream.
double SimplexEngine::next_perturbation() {
  perturb_state_ ^= perturb_state_ << 13;
  perturb_state_ ^= perturb_state_ >> 7;
  perturb_state_ ^= perturb_state_ << 17;
  return 1.0 + static_cast<double>(perturb_state_ >> 11) * 0x1.0p-53;
}

// Widens the bounds of basic variables by tiny random amounts so that a
// degenerate vertex splits into nearby distinct ones.
void SimplexEngine::perturb_bounds() {
  saved_lo_ = lo_;
  saved_up_ = up_;
  for (int i = 0; i < m_; ++i) {
    const int j = basis_[i];
    if (j >= n_ + m_) continue;
    if (std::isfinite(lo_[j])) lo_[j] -= 1e-7 * (1.0 + std::abs(lo_[j])) * next_perturbation();
    if (std::isfinite(up_[j])) up_[j] += 1e-7 * (1.0 + std::abs(up_[j])) * next_perturbation();
  }
}

bool SimplexEngine::restore_bounds() {
  lo_ = std::move(saved_lo_);
  up_ = std::move(saved_up_);
  saved_lo_.clear();
  saved_up_.clear();
  for (int j = 0; j < ncol_; ++j) {
    if (where_[j] >= 0) continue;
    if (at_upper_[j] && std::isfinite(up_[j])) {
      x_[j] = up_[j];
    } else if (std::isfinite(lo_[j])) {
      x_[j] = lo_[j];
      at_upper_[j] = 0;
    }
  }
  compute_basic_values();
  return true;
}

LpStatus SimplexEngine::run_primal(const std::vector<double>& cost) {
  if (!refresh(cost)) return LpStatus::kIterationLimit;
  int degenerate_run = 0;
  int perturb_rounds = 0;
  const double ptol = options_.pivot_tol;
  const double ftol = options_.primal_tol;
  std::vector<double> column(m_), row;
  bool verified = false;
  for (;;) {
    LpStatus why;
    if (budget_exhausted(&why)) return why;
    if (degenerate_run > kStallPivots && saved_lo_.empty() && perturb_rounds < kMaxPerturbRounds) {
      perturb_bounds();
      ++perturb_rounds;
      degenerate_run = 0;
    }
    const bool stalled = degenerate_run > kStallPivots;
    const int q = choose_entering(stalled);
    if (q < 0) {
      // Confirm optimality on fresh factors before reporting it.
      if (!etas_.empty() && !verified) {
        if (!refresh(cost)) return LpStatus::kIterationLimit;
        verified = true;
        continue;
      }
      if (saved_lo_.empty()) return LpStatus::kOptimal;
      // Back to the true bounds; the dual simplex absorbs the small primal
      // infeasibility this leaves, then primal pricing resumes.
      if (!restore_bounds()) return LpStatus::kIterationLimit;
      const LpStatus st = run_dual(cost);
      if (st != LpStatus::kOptimal) return st;
      verified = false;
      continue;
    }
    verified = false;
    load_column(q, column);
    ftran(column);
    const bool free = !std::isfinite(lo_[q]) && !std::isfinite(up_[q]);
    const double dir = free ? (d_[q] < 0.0 ? 1.0 : -1.0) : at_upper_[q] ? -1.0 : 1.0;
    const bool bland = options_.pricing == PricingRule::kBland || stalled;

    // Harris two-pass ratio test over the basic variables.
    auto room = [&](int i, bool* to_upper) {
      const int b = basis_[i];
      const double delta = -dir * column[i];
      if (delta < 0.0) {
        *to_upper = false;
        return std::isfinite(lo_[b]) ? x_[b] - lo_[b] : kInf;
      }
      *to_upper = true;
      return std::isfinite(up_[b]) ? up_[b] - x_[b] : kInf;
    };
    double col_max = 0.0;
    for (int i = 0; i < m_; ++i) col_max = std::max(col_max, std::abs(column[i]));
    const double rtol = std::max(ptol, 1e-7 * col_max);
    double bound = kInf;
    for (int i = 0; i < m_; ++i) {
      if (std::abs(column[i]) <= rtol) continue;
      bool tu;
      const double rm = room(i, &tu);
      if (std::isfinite(rm)) bound = std::min(bound, (std::max(rm, 0.0) + ftol) / std::abs(column[i]));
    }
    int r = -1;
    bool r_to_upper = false;
    double best = 0.0;
    double theta = kInf;
    for (int i = 0; i < m_; ++i) {
      const double a = std::abs(column[i]);
      if (a <= rtol) continue;
      bool tu;
      const double rm = room(i, &tu);
      if (!std::isfinite(rm)) continue;
      const double ratio = std::max(rm, 0.0) / a;
      if (ratio > bound) continue;
      const bool take = r < 0 || (bland ? basis_[i] < basis_[r] : a > best);
      if (take) {
        r = i;
        r_to_upper = tu;
        best = a;
        theta = ratio;
      }
    }
    const double range = up_[q] - lo_[q];
    const bool flip = std::isfinite(range) && range <= theta;
    if (flip) theta = range;
    if (!std::isfinite(theta)) return LpStatus::kUnbounded;
    degenerate_run = theta <= ftol ? degenerate_run + 1 : 0;
    if (theta != 0.0) {
      for (int i = 0; i < m_; ++i) {
        if (column[i] != 0.0) x_[basis_[i]] -= dir * column[i] * theta;
      }
      x_[q] += dir * theta;
    }
    if (flip) {
      at_upper_[q] = at_upper_[q] ? 0 : 1;
      x_[q] = at_upper_[q] ? up_[q] : lo_[q];
      ++iterations_;
      continue;
    }
    pivot_row(r, row);
    if (std::abs(column[r] - row[q]) > 1e-7 * (1.0 + std::abs(column[r]))) {
      // Update drift; pivot only on values the fresh factors agree on.
      if (etas_.empty()) return LpStatus::kIterationLimit;
      if (!refresh(cost)) return LpStatus::kIterationLimit;
      continue;
    }
    const int leaving = basis_[r];
    x_[leaving] = r_to_upper ? up_[leaving] : lo_[leaving];
    change_basis(r, q, column, row);
    at_upper_[leaving] = r_to_upper ? 1 : 0;
    at_upper_[q] = 0;
    if (static_cast<int>(etas_.size()) >= kRefactorEvery && !refresh(cost)) return LpStatus::kIterationLimit;
  }
}

LpStatus SimplexEngine::run_dual(const std::vector<double>& true_cost) {
  const double tol = options_.primal_tol;
  const double ptol = options_.pivot_tol;
  const double dtol = options_.dual_tol;
  std::vector<double> column(m_), row;
  // Shifted costs once dual degeneracy stalls progress; see perturb below.
  std::vector<double> shifted;
  const std::vector<double>* cost = &true_cost;
  auto finish = [&](LpStatus st) {
    if (cost != &true_cost) compute_reduced_costs(true_cost);
    return st;
  };
  bool verified = false;
  int degenerate_run = 0;
  for (;;) {
    LpStatus why;
    if (budget_exhausted(&why)) return finish(why);
    if (degenerate_run > kStallPivots && cost == &true_cost) {
      shifted = true_cost;
      for (int j = 0; j < ncol_; ++j) {
        if (where_[j] >= 0 || lo_[j] == up_[j]) continue;
        if (!std::isfinite(lo_[j]) && !std::isfinite(up_[j])) continue;
        const double shift = 5e-7 * (1.0 + std::abs(true_cost[j])) * next_perturbation();
        // Push the reduced cost further into its dual-feasible side.
        const double want = at_upper_[j] ? std::min(d_[j], 0.0) - shift : std::max(d_[j], 0.0) + shift;
        shifted[j] += want - d_[j];
        d_[j] = want;
      }
      cost = &shifted;
      degenerate_run = 0;
    }
    int r = -1;
    double worst = 0.0;
    for (int i = 0; i < m_; ++i) {
      const int b = basis_[i];
      double infeas = 0.0;
      if (x_[b] < lo_[b]) infeas = lo_[b] - x_[b];
      if (x_[b] > up_[b]) infeas = x_[b] - up_[b];
      const double bnd = x_[b] < lo_[b] ? lo_[b] : up_[b];
      if (infeas > tol * (1.0 + std::abs(bnd)) && infeas > worst) {
        worst = infeas;
        r = i;
      }
    }
    if (r < 0) return finish(LpStatus::kOptimal);
    const int b = basis_[r];
    const bool to_lower = x_[b] < lo_[b];
    pivot_row(r, row);

    // Harris two-pass ratio test: bound the step with slightly relaxed
    // reduced costs, then take the largest pivot inside that bound.
    double row_max = 0.0;
    for (int j = 0; j < ncol_; ++j) {
      if (lo_[j] != up_[j]) row_max = std::max(row_max, std::abs(row[j]));
    }
    const double rtol = std::max(ptol, 1e-7 * row_max);
    auto dual_slack = [&](int j) {
      const bool free = !std::isfinite(lo_[j]) && !std::isfinite(up_[j]);
      return free ? 0.0 : at_upper_[j] ? -d_[j] : d_[j];
    };
    auto eligible = [&](int j) {
      if (where_[j] >= 0 || lo_[j] == up_[j]) return false;
      const double a = row[j];
      if (std::abs(a) <= rtol) return false;
      if (!std::isfinite(lo_[j]) && !std::isfinite(up_[j])) return true;
      return to_lower ? (at_upper_[j] ? a > 0.0 : a < 0.0) : (at_upper_[j] ? a < 0.0 : a > 0.0);
    };
    double bound = kInf;
    for (int j = 0; j < ncol_; ++j) {
      if (!eligible(j)) continue;
      bound = std::min(bound, (std::max(0.0, dual_slack(j)) + dtol) / std::abs(row[j]));
    }
    int q = -1;
    double best_piv = 0.0;
    for (int j = 0; j < ncol_; ++j) {
      if (!eligible(j)) continue;
      const double a = std::abs(row[j]);
      if (std::max(0.0, dual_slack(j)) / a <= bound && a > best_piv) {
        best_piv = a;
        q = j;
      }
    }
    if (q < 0) {
      // A dual ray on stale factors is not trusted.
      if (verified) return finish(LpStatus::kInfeasible);
      if (!refresh(*cost)) return finish(LpStatus::kIterationLimit);
      verified = true;
      continue;
    }
    load_column(q, column);
    ftran(column);
    const double piv = column[r];
    if (std::abs(piv - row[q]) > 1e-7 * (1.0 + std::abs(piv)) || std::abs(piv) <= ptol) {
      if (etas_.empty()) return finish(LpStatus::kIterationLimit);
      if (!refresh(*cost)) return finish(LpStatus::kIterationLimit);
      continue;
    }
    verified = false;
    degenerate_run = std::max(0.0, dual_slack(q)) <= dtol ? degenerate_run + 1 : 0;
    const double target = to_lower ? lo_[b] : up_[b];
    const double delta = (x_[b] - target) / piv;
    for (int i = 0; i < m_; ++i) {
      if (column[i] != 0.0) x_[basis_[i]] -= column[i] * delta;
    }
    x_[q] += delta;
    change_basis(r, q, column, row);
    x_[b] = target;
    at_upper_[b] = to_lower ? 0 : 1;
    at_upper_[q] = 0;
    if (static_cast<int>(etas_.size()) >= kRefactorEvery && !refresh(*cost)) {
      return finish(LpStatus::kIterationLimit);
    }
  }
}

LpStatus SimplexEngine::solve() {
  run_start_ = iterations_;
  initialize();
  if (ncol_ > n_ + m_) {
    std::vector<double> phase1(ncol_, 0.0);
    for (int j = n_ + m_; j < ncol_; ++j) phase1[j] = 1.0;
    LpStatus st = run_primal(phase1);
    if (st != LpStatus::kOptimal) return status_ = st;
    double infeas = 0.0;
    double scale = 1.0;
    for (int j = n_ + m_; j < ncol_; ++j) infeas += x_[j];
    for (int i = 0; i < m_; ++i) scale = std::max(scale, std::abs(rhs_[i]));
    if (infeas > 1e-9 * scale) return status_ = LpStatus::kInfeasible;
    for (int j = n_ + m_; j < ncol_; ++j) {
      up_[j] = 0.0;
      if (where_[j] < 0) {
        x_[j] = 0.0;
        at_upper_[j] = 0;
      }
    }
  }
  phase2_ = true;
  return status_ = run_primal(cost_);
}

LpStatus SimplexEngine::reoptimize_bounds(std::span<const double> lower,
                                          std::span<const double> upper) {
  for (int j = 0; j < n_; ++j) {
    orig_lo_[j] = lower[j];
    orig_up_[j] = upper[j];
  }
  if (!phase2_ || !lu_ || (status_ != LpStatus::kOptimal && status_ != LpStatus::kInfeasible)) {
    return solve();
  }
  run_start_ = iterations_;
  compute_reduced_costs(cost_);
  const double tol = options_.dual_tol;
  for (int j = 0; j < n_; ++j) {
    lo_[j] = lower[j] / col_scale_[j];
    up_[j] = upper[j] / col_scale_[j];
    if (where_[j] >= 0) continue;
    bool want_upper;
    if (lo_[j] == up_[j]) {
      want_upper = false;
    } else if (d_[j] > tol) {
      want_upper = false;
    } else if (d_[j] < -tol) {
      want_upper = true;
    } else {
      want_upper = at_upper_[j] ? std::isfinite(up_[j]) : !std::isfinite(lo_[j]);
    }
    const double v = want_upper ? up_[j] : lo_[j];
    if (!std::isfinite(v)) return solve();
    at_upper_[j] = want_upper ? 1 : 0;
    x_[j] = v;
  }
  compute_basic_values();
  LpStatus st = run_dual(cost_);
  if (st == LpStatus::kOptimal) {
    // Dual pivots may leave tiny reduced-cost errors; polish with primal.
    st = run_primal(cost_);
  }
  if (st == LpStatus::kIterationLimit) return solve();
  return status_ = st;
}

LpStatus SimplexEngine::reoptimize_objective(const LinObjective& objective) {
  set_cost(objective);
  if (!phase2_ || !lu_ || status_ != LpStatus::kOptimal) return solve();
  run_start_ = iterations_;
  for (int j = 0; j < n_; ++j) cost_[j] = orig_cost_[j] * col_scale_[j] * obj_scale_;
  return status_ = run_primal(cost_);
}

std::vector<double> SimplexEngine::solution() const {
  std::vector<double> out(n_);
  for (int j = 0; j < n_; ++j) {
    double v = x_[j] * col_scale_[j];
    v = std::clamp(v, orig_lo_[j], orig_up_[j]);
    out[j] = v;
  }
  return out;
}

double SimplexEngine::objective_value() const {
  double s = obj_constant_;
  const std::vector<double> x = solution();
  for (int j = 0; j < n_; ++j) s += orig_cost_[j] * x[j];
  return s;
}

LpResult solve_lp(const Model& model, const LinObjective& objective,
                  const SimplexOptions& options) {
  LpResult res;
  if (model.num_constraints() == 0) {
    // Bounds only: each variable sits at its cheaper bound.
    res.status = LpStatus::kOptimal;
    res.x.resize(model.num_vars());
    const std::vector<double> c = objective.dense(model.num_vars());
    for (std::size_t j = 0; j < model.num_vars(); ++j) {
      const VarSpec& v = model.var(static_cast<int>(j));
      if (c[j] < 0.0) {
        if (!std::isfinite(v.upper)) {
          res.status = LpStatus::kUnbounded;
          res.x.clear();
          return res;
        }
        res.x[j] = v.upper;
      } else {
        res.x[j] = v.lower;
      }
    }
    res.objective = objective.evaluate(res.x);
    return res;
  }
  SimplexEngine engine(model, objective, options);
  res.status = engine.solve();
  res.iterations = engine.iterations();
  if (res.status == LpStatus::kOptimal) {
    res.x = engine.solution();
    res.objective = objective.evaluate(res.x);
  }
  return res;
}

}  // namespace sscopt::milp
