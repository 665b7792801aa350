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

#include "sscopt/milp/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sscopt::milp {

const char* to_string(VarDomain d) {
  switch (d) {
    case VarDomain::kContinuous: return "continuous";
    case VarDomain::kInteger: return "integer";
    case VarDomain::kBinary: return "binary";
  }
  return "?";
}

const char* to_string(Sense s) {
  switch (s) {
    case Sense::kLessEqual: return "<=";
    case Sense::kEqual: return "=";
    case Sense::kGreaterEqual: return ">=";
  }
  return "?";
}

const char* to_string(Block b) {
  return b == Block::kRelaxable ? "relaxable" : "kept";
}

std::vector<LinTerm> canonical_terms(std::vector<LinTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
  std::vector<LinTerm> out;
  out.reserve(terms.size());
  for (const LinTerm& t : terms) {
    if (!out.empty() && out.back().var == t.var) {
      out.back().coef += t.coef;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const LinTerm& t) { return t.coef == 0.0; });
  return out;
}

double LinConstraint::activity(std::span<const double> x) const {
  double s = 0.0;
  for (const LinTerm& t : terms) s += t.coef * x[t.var];
  return s;
}

double LinConstraint::violation(std::span<const double> x) const {
  const double a = activity(x);
  switch (sense) {
    case Sense::kLessEqual: return std::max(0.0, a - rhs);
    case Sense::kGreaterEqual: return std::max(0.0, rhs - a);
    case Sense::kEqual: return std::abs(a - rhs);
  }
  return 0.0;
}

double LinObjective::evaluate(std::span<const double> x) const {
  double s = constant;
  for (const LinTerm& t : terms) s += t.coef * x[t.var];
  return s;
}

std::vector<double> LinObjective::dense(std::size_t n) const {
  std::vector<double> c(n, 0.0);
  for (const LinTerm& t : terms) c.at(t.var) += t.coef;
  return c;
}

LinObjective LinObjective::from_dense(std::span<const double> coefs, double constant) {
  LinObjective o;
  o.constant = constant;
  for (std::size_t j = 0; j < coefs.size(); ++j) {
    if (coefs[j] != 0.0) o.terms.push_back({static_cast<int>(j), coefs[j]});
  }
  return o;
}

LinObjective operator+(const LinObjective& a, const LinObjective& b) {
  LinObjective o;
  o.terms = a.terms;
  o.terms.insert(o.terms.end(), b.terms.begin(), b.terms.end());
  o.terms = canonical_terms(std::move(o.terms));
  o.constant = a.constant + b.constant;
  return o;
}

LinObjective operator*(double s, const LinObjective& a) {
  LinObjective o = a;
  for (LinTerm& t : o.terms) t.coef *= s;
  o.constant *= s;
  o.terms = canonical_terms(std::move(o.terms));
  return o;
}

int Model::add_var(VarSpec spec) {
  if (spec.id.empty()) throw ModelError("variable id must not be empty");
  if (var_index_.contains(spec.id)) throw ModelError("duplicate variable id " + spec.id);
  if (spec.domain == VarDomain::kBinary) {
    spec.lower = std::max(spec.lower, 0.0);
    spec.upper = std::min(spec.upper, 1.0);
  }
  if (!(spec.lower <= spec.upper) || std::isinf(spec.lower)) {
    throw ModelError("bad bounds for variable " + spec.id);
  }
  const int idx = static_cast<int>(vars_.size());
  var_index_.emplace(spec.id, idx);
  vars_.push_back(std::move(spec));
  return idx;
}

int Model::add_var(std::string id, VarDomain domain, double lower, double upper) {
  return add_var(VarSpec{std::move(id), domain, lower, upper});
}

int Model::add_constraint(LinConstraint row) {
  row.terms = canonical_terms(std::move(row.terms));
  if (row.terms.empty()) throw ModelError("constraint " + row.label + " has no terms");
  for (const LinTerm& t : row.terms) {
    if (t.var < 0 || t.var >= static_cast<int>(vars_.size())) {
      throw ModelError("constraint " + row.label + " references unknown variable");
    }
  }
  if (row.label.empty()) row.label = "r" + std::to_string(rows_.size());
  if (row_index_.contains(row.label)) throw ModelError("duplicate constraint label " + row.label);
  const int idx = static_cast<int>(rows_.size());
  row_index_.emplace(row.label, idx);
  rows_.push_back(std::move(row));
  return idx;
}

int Model::find_var(const std::string& id) const {
  auto it = var_index_.find(id);
  return it == var_index_.end() ? -1 : it->second;
}

int Model::find_constraint(const std::string& label) const {
  auto it = row_index_.find(label);
  return it == row_index_.end() ? -1 : it->second;
}

std::size_t Model::count_block(Block b) const {
  return std::count_if(rows_.begin(), rows_.end(),
                       [b](const LinConstraint& r) { return r.block == b; });
}

bool Model::has_integral_vars() const {
  return std::any_of(vars_.begin(), vars_.end(),
                     [](const VarSpec& v) { return v.is_integral(); });
}

std::string Model::check_feasible(std::span<const double> x, double tol) const {
  if (x.size() != vars_.size()) return "assignment has wrong length";
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    const VarSpec& v = vars_[j];
    const double scale = std::max(1.0, std::abs(x[j]));
    if (x[j] < v.lower - tol * scale || x[j] > v.upper + tol * scale) {
      std::ostringstream os;
      os << "variable " << v.id << " = " << x[j] << " outside [" << v.lower << ", " << v.upper << "]";
      return os.str();
    }
    if (v.is_integral() && std::abs(x[j] - std::round(x[j])) > kIntTol) {
      return "variable " + v.id + " is fractional";
    }
  }
  for (const LinConstraint& r : rows_) {
    double scale = std::max(1.0, std::abs(r.rhs));
    for (const LinTerm& t : r.terms) scale = std::max(scale, std::abs(t.coef * x[t.var]));
    const double viol = r.violation(x);
    if (viol > tol * scale) {
      std::ostringstream os;
      os << "constraint " << r.label << " violated by " << viol;
      return os.str();
    }
  }
  return {};
}

bool Model::operator==(const Model& other) const {
  if (vars_.size() != other.vars_.size() || rows_.size() != other.rows_.size()) return false;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    const VarSpec& a = vars_[j];
    const VarSpec& b = other.vars_[j];
    if (a.id != b.id || a.domain != b.domain || a.lower != b.lower || a.upper != b.upper) return false;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const LinConstraint& a = rows_[i];
    const LinConstraint& b = other.rows_[i];
    if (a.label != b.label || a.sense != b.sense || a.rhs != b.rhs || a.block != b.block ||
        a.terms != b.terms) {
      return false;
    }
  }
  return true;
}

Model fix_variables(const Model& m, const std::map<int, double>& fixes) {
  Model out = m;
  for (const auto& [idx, value] : fixes) {
    if (idx < 0 || idx >= static_cast<int>(m.num_vars())) throw DomainError("unknown variable index");
    VarSpec& v = out.mutable_var(idx);
    if (value < v.lower - kFeasTol || value > v.upper + kFeasTol) {
      throw DomainError("value for " + v.id + " outside its bounds");
    }
    if (v.is_integral() && std::abs(value - std::round(value)) > kIntTol) {
      throw DomainError("fractional value for integral variable " + v.id);
    }
    const double clean = v.is_integral() ? std::round(value) : value;
    v.lower = clean;
    v.upper = clean;
  }
  return out;
}

Model fix_variables(const Model& m, const std::map<std::string, double>& fixes) {
  std::map<int, double> by_index;
  for (const auto& [id, value] : fixes) {
    const int idx = m.find_var(id);
    if (idx < 0) throw DomainError("unknown variable " + id);
    by_index[idx] = value;
  }
  return fix_variables(m, by_index);
}

Model relax_integrality(const Model& m) {
  Model out;
  for (VarSpec v : m.vars()) {
    v.domain = VarDomain::kContinuous;
    out.add_var(std::move(v));
  }
  for (const LinConstraint& r : m.constraints()) out.add_constraint(r);
  return out;
}

Model drop_block(const Model& m, Block dropped) {
  Model out;
  for (const VarSpec& v : m.vars()) out.add_var(v);
  for (const LinConstraint& r : m.constraints()) {
    if (r.block != dropped) out.add_constraint(r);
  }
  return out;
}

}  // namespace sscopt::milp
