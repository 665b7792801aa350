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

#ifndef SSCOPT_MILP_MODEL_HPP_
#define SSCOPT_MILP_MODEL_HPP_

#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace sscopt::milp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Integrality and feasibility tolerance shared by the solvers and validators.
inline constexpr double kFeasTol = 1e-6;
inline constexpr double kIntTol = 1e-6;

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VarDomain { kContinuous, kInteger, kBinary };
enum class Sense { kLessEqual, kEqual, kGreaterEqual };
enum class Block { kKept, kRelaxable };

const char* to_string(VarDomain d);
const char* to_string(Sense s);
const char* to_string(Block b);

struct VarSpec {
  std::string id;
  VarDomain domain = VarDomain::kContinuous;
  double lower = 0.0;
  double upper = kInf;

  bool is_integral() const { return domain != VarDomain::kContinuous; }
};

struct LinTerm {
  int var = 0;
  double coef = 0.0;

  bool operator==(const LinTerm&) const = default;
};

// Merges duplicate indices, drops exact zeros, sorts by index.
std::vector<LinTerm> canonical_terms(std::vector<LinTerm> terms);

struct LinConstraint {
  std::vector<LinTerm> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  Block block = Block::kKept;
  std::string label;

  double activity(std::span<const double> x) const;
  // Amount by which x violates the row (0 when satisfied).
  double violation(std::span<const double> x) const;
};

struct LinObjective {
  std::vector<LinTerm> terms;
  double constant = 0.0;

  double evaluate(std::span<const double> x) const;
  // Dense coefficient vector of length n.
  std::vector<double> dense(std::size_t n) const;
  static LinObjective from_dense(std::span<const double> coefs, double constant = 0.0);
};

LinObjective operator+(const LinObjective& a, const LinObjective& b);
LinObjective operator*(double s, const LinObjective& a);

class Model {
 public:
  Model() = default;

  int add_var(VarSpec spec);
  int add_var(std::string id, VarDomain domain, double lower, double upper);
  // Rejects empty rows and duplicate labels; terms are canonicalized.
  int add_constraint(LinConstraint row);

  std::size_t num_vars() const { return vars_.size(); }
  std::size_t num_constraints() const { return rows_.size(); }
  const std::vector<VarSpec>& vars() const { return vars_; }
  const std::vector<LinConstraint>& constraints() const { return rows_; }
  const VarSpec& var(int i) const { return vars_.at(i); }
  VarSpec& mutable_var(int i) { return vars_.at(i); }
  const LinConstraint& constraint(int i) const { return rows_.at(i); }
  LinConstraint& mutable_constraint(int i) { return rows_.at(i); }

  // -1 when absent.
  int find_var(const std::string& id) const;
  int find_constraint(const std::string& label) const;

  std::size_t count_block(Block b) const;
  bool has_integral_vars() const;

  // Checks bounds, integrality and every row; returns a description of the
  // first violation or an empty string. Row violations are measured against
  // tol scaled by the row magnitude at x.
  std::string check_feasible(std::span<const double> x, double tol = kFeasTol) const;

  bool operator==(const Model& other) const;

 private:
  std::vector<VarSpec> vars_;
  std::vector<LinConstraint> rows_;
  std::unordered_map<std::string, int> var_index_;
  std::unordered_map<std::string, int> row_index_;
};

// Copy with the given variables fixed (lower = upper = value). Throws
// DomainError if a value lies outside the variable's bounds or is
// fractional for an integer or binary variable.
Model fix_variables(const Model& m, const std::map<int, double>& fixes);
Model fix_variables(const Model& m, const std::map<std::string, double>& fixes);

// Copy with every variable continuous; bounds unchanged.
Model relax_integrality(const Model& m);

// Copy keeping only rows of the given block.
Model drop_block(const Model& m, Block dropped);

}  // namespace sscopt::milp

#endif  // SSCOPT_MILP_MODEL_HPP_
