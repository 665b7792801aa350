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

// Shared helpers for the model builders; not installed.

#ifndef SSCOPT_SRC_SSC_BUILDER_UTIL_HPP_
#define SSCOPT_SRC_SSC_BUILDER_UTIL_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "sscopt/ssc/model.hpp"

namespace sscopt::ssc {

class ModelBuilder {
 public:
  static void build_catalog(const SSCInstance& inst, TriObjectiveModel& tm);
};

double fleet_big_m(const SSCInstance& inst, const std::vector<Lane>& lanes, int mode, int i);

// Readable names for ids and labels.
class Names {
 public:
  explicit Names(const SSCInstance& inst) : inst_(inst) {}
  std::string entity(int i) const { return inst_.entities[i].name; }
  std::string mode(int a) const { return inst_.modes[a].name; }
  std::string tech(int g) const { return "g" + std::to_string(g); }
  std::string period(int t) const { return "t" + std::to_string(t + 1); }
  std::string item(int m) const {
    if (m < inst_.n_raw) return "rm" + std::to_string(m);
    if (m < inst_.n_raw + inst_.n_final) return "fp" + std::to_string(m - inst_.n_raw);
    return "rp" + std::to_string(m - inst_.n_raw - inst_.n_final);
  }

 private:
  const SSCInstance& inst_;
};

inline std::string tag(const std::string& family, std::initializer_list<std::string> parts) {
  std::string s = family + "(";
  bool first = true;
  for (const std::string& p : parts) {
    if (!first) s += ",";
    s += p;
    first = false;
  }
  return s + ")";
}

// Accumulates one row; skips adding when it has no terms.
struct Row {
  std::vector<milp::LinTerm> terms;

  void add(int var, double coef) {
    if (var >= 0 && coef != 0.0) terms.push_back({var, coef});
  }
  bool emit(milp::Model& m, milp::Sense sense, double rhs, milp::Block block, std::string label) {
    if (terms.empty()) return false;
    m.add_constraint({std::move(terms), sense, rhs, block, std::move(label)});
    terms.clear();
    return true;
  }
};

}  // namespace sscopt::ssc

#endif  // SSCOPT_SRC_SSC_BUILDER_UTIL_HPP_
