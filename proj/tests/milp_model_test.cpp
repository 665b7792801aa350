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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sscopt/milp/lp_format.hpp"

namespace sscopt::milp {
namespace {

using Terms = std::vector<LinTerm>;

Model small_model() {
  Model m;
  m.add_var("x", VarDomain::kContinuous, 0.0, 3.0);
  m.add_var("q", VarDomain::kInteger, 0.0, 10.0);
  m.add_var("y", VarDomain::kBinary, 0.0, 1.0);
  m.add_constraint({Terms{{0, 1}, {1, -2.5}}, Sense::kLessEqual, 0.0, Block::kKept, "cap(0,1)"});
  m.add_constraint({Terms{{0, 1}, {2, -3}}, Sense::kLessEqual, 0.0, Block::kRelaxable, "open"});
  m.add_constraint({Terms{{0, 1}}, Sense::kEqual, 1.25, Block::kKept, "dem"});
  return m;
}

TEST(ModelTest, CanonicalTermsMergeAndSort) {
  Terms t = canonical_terms({{3, 1.0}, {1, 2.0}, {3, -1.0}, {0, 0.5}});
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], (LinTerm{0, 0.5}));
  EXPECT_EQ(t[1], (LinTerm{1, 2.0}));
}

TEST(ModelTest, RejectsEmptyRowsAndDuplicateLabels) {
  Model m = small_model();
  EXPECT_THROW(m.add_constraint({Terms{}, Sense::kLessEqual, 1.0, Block::kKept, "e"}), ModelError);
  EXPECT_THROW(m.add_constraint({Terms{{0, 1}}, Sense::kLessEqual, 1.0, Block::kKept, "dem"}), ModelError);
  EXPECT_THROW(m.add_var("x", VarDomain::kContinuous, 0, 1), ModelError);
}

TEST(ModelTest, FixVariablesSetsBothBounds) {
  Model f = fix_variables(small_model(), std::map<std::string, double>{{"q", 2.0}, {"x", 1.5}});
  EXPECT_EQ(f.var(1).lower, 2.0);
  EXPECT_EQ(f.var(1).upper, 2.0);
  EXPECT_EQ(f.var(0).lower, 1.5);
}

TEST(ModelTest, FixVariablesRejectsOutOfDomainValues) {
  const Model m = small_model();
  EXPECT_THROW(fix_variables(m, std::map<std::string, double>{{"x", 4.0}}), DomainError);
  EXPECT_THROW(fix_variables(m, std::map<std::string, double>{{"q", 1.5}}), DomainError);
  EXPECT_THROW(fix_variables(m, std::map<std::string, double>{{"y", 2.0}}), DomainError);
  EXPECT_THROW(fix_variables(m, std::map<std::string, double>{{"nope", 0.0}}), DomainError);
}

TEST(ModelTest, RelaxIntegrityKeepsBounds) {
  Model r = relax_integrality(small_model());
  for (const VarSpec& v : r.vars()) EXPECT_EQ(v.domain, VarDomain::kContinuous);
  EXPECT_EQ(r.var(1).upper, 10.0);
  EXPECT_EQ(r.var(2).upper, 1.0);
  EXPECT_FALSE(r.has_integral_vars());
}

TEST(ModelTest, DropBlockRemovesOnlyThatBlock) {
  Model d = drop_block(small_model(), Block::kRelaxable);
  EXPECT_EQ(d.num_constraints(), 2u);
  EXPECT_EQ(d.count_block(Block::kRelaxable), 0u);
}

TEST(ModelTest, CheckFeasibleReportsViolations) {
  const Model m = small_model();
  EXPECT_TRUE(m.check_feasible(std::vector<double>{1.25, 1, 1}).empty());
  EXPECT_FALSE(m.check_feasible(std::vector<double>{1.25, 0, 1}).empty());
  EXPECT_FALSE(m.check_feasible(std::vector<double>{1.25, 0.5, 1}).empty());
}

TEST(LpFormatTest, EmptyModelHasAllSections) {
  const std::string text = export_lp(Model{}, LinObjective{});
  for (const char* s : {"Minimize", "Subject To", "Bounds", "Generals", "Binaries", "End"}) {
    EXPECT_NE(text.find(s), std::string::npos) << s;
  }
  ParsedLp p = parse_lp(text);
  EXPECT_EQ(p.model.num_vars(), 0u);
}

TEST(LpFormatTest, SingleVariableBoundLine) {
  Model m;
  m.add_var("x", VarDomain::kContinuous, 0.0, 5.0);
  const std::string text = export_lp(m, LinObjective{Terms{{0, 1.0}}, 0.0});
  EXPECT_NE(text.find("0 <= x <= 5"), std::string::npos);
}

TEST(LpFormatTest, RoundTripPreservesStructure) {
  const Model m = small_model();
  const LinObjective obj{Terms{{0, 1.0 / 3.0}, {1, -2e-7}, {2, 12345.678}}, -4.5};
  ParsedLp p = parse_lp(export_lp(m, obj));
  EXPECT_TRUE(p.model == m);
  EXPECT_EQ(p.objective.terms, obj.terms);
  EXPECT_EQ(p.objective.constant, obj.constant);
  EXPECT_EQ(p.model.constraint(1).block, Block::kRelaxable);
}

TEST(LpFormatTest, RoundTripRandomModels) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto [m, obj] = testing::random_milp(rng, 4, 4, 6);
    ParsedLp p = parse_lp(export_lp(m, obj));
    EXPECT_TRUE(p.model == m) << "trial " << trial;
  }
}

TEST(LpFormatTest, ParsesMaximizeAndMultilineRows) {
  const std::string text =
      "Maximize\n obj: 2 x + y\nSubject To\n c1: x + y\n   <= 4\n c2: x - y >= -1\n"
      "Bounds\n x <= 3\n -inf <= y <= +inf\nEnd\n";
  EXPECT_THROW(parse_lp(text), ParseError);  // free lower bounds are rejected
  const std::string ok =
      "Maximize\n obj: 2 x + y\nSubject To\n c1: x + y\n   <= 4\n c2: x - y >= -1\nBounds\n x <= 3\nEnd\n";
  ParsedLp p = parse_lp(ok);
  ASSERT_EQ(p.model.num_constraints(), 2u);
  EXPECT_EQ(p.model.constraint(0).rhs, 4.0);
  EXPECT_EQ(p.objective.terms[0].coef, -2.0);
}

TEST(ResultIoTest, JsonRoundTrip) {
  const Model m = small_model();
  MilpResult r;
  r.status = MilpStatus::kOptimal;
  r.assignment = {1.25, 1.0, 1.0};
  r.objective = 7.5;
  r.best_bound = 7.4;
  MilpResult back = result_from_json(m, result_to_json(m, r));
  EXPECT_EQ(back.status, r.status);
  EXPECT_EQ(back.assignment, r.assignment);
  EXPECT_EQ(back.objective, r.objective);
  EXPECT_EQ(back.best_bound, r.best_bound);
}

}  // namespace
}  // namespace sscopt::milp
