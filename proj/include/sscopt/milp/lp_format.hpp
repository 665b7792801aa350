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

#ifndef SSCOPT_MILP_LP_FORMAT_HPP_
#define SSCOPT_MILP_LP_FORMAT_HPP_

#include <string>

#include "json.hpp"

#include "sscopt/milp/branch_and_bound.hpp"
#include "sscopt/milp/model.hpp"

namespace sscopt::milp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CPLEX-style LP text. Relaxable rows are preceded by a "\@relaxable"
// comment line, which other readers ignore. Every variable gets an explicit
// bounds line so parsing restores the original column order.
std::string export_lp(const Model& model, const LinObjective& objective);

struct ParsedLp {
  Model model;
  LinObjective objective;
};

// Reads the subset written by export_lp plus common variants (Maximize,
// free bounds, infinite bounds, multi-line rows).
ParsedLp parse_lp(const std::string& text);

// {status, objective, best_bound, assignment{var id: value}}
nlohmann::json result_to_json(const Model& model, const MilpResult& result);
MilpResult result_from_json(const Model& model, const nlohmann::json& j);

}  // namespace sscopt::milp

#endif  // SSCOPT_MILP_LP_FORMAT_HPP_
