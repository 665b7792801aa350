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

#include "sscopt/ssc/model.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "sscopt/instgen/generator.hpp"
#include "sscopt/milp/branch_and_bound.hpp"
#include "sscopt/milp/simplex.hpp"

namespace sscopt::ssc {
namespace {

instgen::GenConfig tiny_config() {
  instgen::GenConfig cfg;
  cfg.suppliers = cfg.factories = cfg.warehouses = cfg.customers = 1;
  cfg.airports = cfg.seaports = 0;
  cfg.raw_materials = 1;
  cfg.prod_techs = cfg.rem_techs = 1;
  cfg.trucks = 1;
  cfg.periods = 2;
  return cfg;
}

std::size_t count_prefix(const milp::Model& m, const std::string& prefix) {
  return std::count_if(m.constraints().begin(), m.constraints().end(),
                       [&](const milp::LinConstraint& c) { return c.label.starts_with(prefix + "("); });
}

int entity_named(const SSCInstance& inst, const std::string& name) {
  for (int i = 0; i < inst.num_entities(); ++i) {
    if (inst.entities[i].name == name) return i;
  }
  return -1;
}

void zero_demand(SSCInstance& inst) {
  for (auto& per_entity : inst.dmd) {
    for (auto& per_period : per_entity) std::fill(per_period.begin(), per_period.end(), 0.0);
  }
}

TEST(SscModelTest, EveryRelaxableRowTiesToABinary) {
  const TriObjectiveModel tm = build_model(instgen::generate(instgen::GenConfig{}));
  ASSERT_GT(tm.model.count_block(milp::Block::kRelaxable), 0u);
  for (const auto& row : tm.model.constraints()) {
    if (row.block != milp::Block::kRelaxable) continue;
    const bool has_binary = std::any_of(row.terms.begin(), row.terms.end(), [&](const milp::LinTerm& t) {
      return tm.model.var(t.var).domain == milp::VarDomain::kBinary && t.coef < 0.0;
    });
    EXPECT_TRUE(has_binary) << row.label;
  }
}

TEST(SscModelTest, RowFamilyCountsMatchSetSizes) {
  instgen::GenConfig cfg;
  cfg.suppliers = 1;
  cfg.raw_materials = 1;
  cfg.periods = 3;
  const SSCInstance inst = instgen::generate(cfg);
  const TriObjectiveModel tm = build_model(inst);
  EXPECT_EQ(count_prefix(tm.model, "supply_max"), 3u);
  EXPECT_EQ(count_prefix(tm.model, "supply_min"), 3u);

  const std::size_t nf = inst.count(EntityKind::kFactory);
  EXPECT_EQ(count_prefix(tm.model, "one_prod_tech"), inst.n_final * nf);
  EXPECT_EQ(count_prefix(tm.model, "prod_max"), nf * inst.h_prod.size() * inst.periods);
  EXPECT_EQ(count_prefix(tm.model, "reman_min"), nf * inst.h_rem.size() * inst.periods);
}

TEST(SscModelTest, SingleFactoryExampleHasOneTechnologyChoiceRow) {
  instgen::GenConfig cfg;
  cfg.suppliers = 1;
  cfg.factories = 1;
  cfg.warehouses = 2;
  cfg.customers = 2;
  const TriObjectiveModel tm = build_model(instgen::generate(cfg));
  EXPECT_EQ(count_prefix(tm.model, "one_prod_tech"), 1u);
}

TEST(SscModelTest, ZeroDemandAllowsAllZeroAssignment) {
  SSCInstance inst = instgen::generate(tiny_config());
  zero_demand(inst);
  const TriObjectiveModel tm = build_model(inst);
  const std::vector<double> x(tm.model.num_vars(), 0.0);
  EXPECT_TRUE(validate_solution(tm.model, x).empty());
  const ObjectiveValues v = evaluate_objectives(tm, x);
  EXPECT_EQ(v.eco_prime(), 0.0);
  EXPECT_EQ(v.env_prime(), 0.0);
  EXPECT_EQ(v.soc_prime(), 0.0);
}

TEST(SscModelTest, NegativeFlowIsReported) {
  SSCInstance inst = instgen::generate(tiny_config());
  zero_demand(inst);
  const TriObjectiveModel tm = build_model(inst);
  std::vector<double> x(tm.model.num_vars(), 0.0);
  x[tm.catalog.flow_vars().front()] = -1.0;
  EXPECT_FALSE(validate_solution(tm.model, x).empty());
}

TEST(SscModelTest, SocialContributionOfOneWarehouse) {
  SSCInstance inst = instgen::generate(tiny_config());
  const int w = entity_named(inst, "w0");
  ASSERT_GE(w, 0);
  inst.workers[w] = 5.0;
  inst.workers_per_m2[w] = 0.1;
  inst.unemployment[w] = 10.0;
  inst.gdp_index[w] = 0.5;
  const TriObjectiveModel tm = build_model(inst);
  std::vector<double> x(tm.model.num_vars(), 0.0);
  x[tm.catalog.y(w)] = 1.0;
  x[tm.catalog.yc(w)] = 100.0;
  EXPECT_NEAR(evaluate_objectives(tm, x).soc_prime(), 3.0, 1e-12);
}

TEST(SscModelTest, TripCapacityForcesOneTrip) {
  SSCInstance inst = instgen::generate(tiny_config());
  zero_demand(inst);
  const int c = entity_named(inst, "c0");
  inst.dmd[0][c][0] = 10.0;
  inst.pw[inst.final_item(0)] = 2.0;
  inst.ret_frac[0] = 0.0;
  inst.modes[0].vcap = 20.0;
  const TriObjectiveModel tm = build_model(inst);
  // Fewest trips into the customer in the delivery period.
  std::vector<milp::LinTerm> trips;
  for (const auto& [key, q] : tm.catalog.trip_vars()) {
    if (key[2] == c && key[3] == 0) trips.push_back({q, 1.0});
  }
  ASSERT_FALSE(trips.empty());
  const milp::LinObjective obj{trips, 0.0};
  milp::MilpOptions opt;
  opt.rel_gap = 1e-9;
  const milp::MilpResult r = milp::solve_milp(tm.model, obj, opt);
  ASSERT_EQ(r.status, milp::MilpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 1.0, 1e-9);
}

TEST(SscModelTest, HubImbalanceIsReported) {
  instgen::GenConfig cfg;
  cfg.periods = 2;
  SSCInstance inst = instgen::generate(cfg);
  zero_demand(inst);
  const TriObjectiveModel tm = build_model(inst);
  const int hub = entity_named(inst, "a0");
  ASSERT_GE(hub, 0);
  const int item = inst.final_item(0);
  int in = -1, out = -1;
  for (const Lane& l : tm.catalog.lanes) {
    if (std::find(l.items.begin(), l.items.end(), item) == l.items.end()) continue;
    if (l.to == hub && in < 0) in = tm.catalog.x(item, l.mode, l.from, l.to, 0);
    if (l.from == hub && out < 0) out = tm.catalog.x(item, l.mode, l.from, l.to, 0);
  }
  ASSERT_GE(in, 0);
  ASSERT_GE(out, 0);
  std::vector<double> x(tm.model.num_vars(), 0.0);
  x[in] = 5.0;
  x[out] = 4.0;
  const auto report = validate_solution(tm.model, x);
  const bool hub_row = std::any_of(report.begin(), report.end(), [](const Violation& v) {
    return v.label.starts_with("rec_hub_balance");
  });
  EXPECT_TRUE(hub_row);
}

// A closed entity carries nothing: on the relaxation with Y_i = 0, every
// incident flow, trip, stock, area and fleet column maximizes to zero.
TEST(SscModelTest, ClosedEntityHasNoActivity) {
  const SSCInstance inst = instgen::generate(tiny_config());
  const TriObjectiveModel tm = build_model(inst);
  const VariableCatalog& c = tm.catalog;
  const milp::Model relaxed = milp::relax_integrality(tm.model);
  for (int i = 0; i < inst.num_entities(); ++i) {
    std::vector<int> incident;
    for (const Lane& l : c.lanes) {
      if (l.from != i && l.to != i) continue;
      for (int t = 0; t < inst.periods; ++t) {
        for (int item : l.items) incident.push_back(c.x(item, l.mode, l.from, l.to, t));
        incident.push_back(c.q(l.mode, l.from, l.to, t));
      }
    }
    for (int t = 0; t < inst.periods; ++t) {
      for (int n = 0; n < inst.n_final; ++n) incident.push_back(c.s(n, i, t));
    }
    incident.push_back(c.yc(i));
    for (int a = 0; a < static_cast<int>(inst.modes.size()); ++a) incident.push_back(c.k(a, i));
    std::erase(incident, -1);

    const milp::Model closed = milp::fix_variables(relaxed, std::map<int, double>{{c.y(i), 0.0}});
    for (int v : incident) {
      const milp::LpResult r = milp::solve_lp(closed, milp::LinObjective{{{v, -1.0}}, 0.0});
      if (r.status == milp::LpStatus::kInfeasible) break;  // entity is mandatory
      ASSERT_EQ(r.status, milp::LpStatus::kOptimal) << tm.model.var(v).id;
      EXPECT_NEAR(r.objective, 0.0, 1e-7) << tm.model.var(v).id;
    }
  }
}

TEST(SscModelTest, JsonRoundTrip) {
  const SSCInstance inst = instgen::generate(instgen::GenConfig{});
  const nlohmann::json j = to_json(inst);
  EXPECT_EQ(to_json(instance_from_json(j)), j);
  EXPECT_EQ(build_model(instance_from_json(j)).model, build_model(inst).model);
}

TEST(SscModelTest, RejectsMismatchedDimensions) {
  SSCInstance inst = instgen::generate(tiny_config());
  inst.pw.pop_back();
  EXPECT_THROW(check_dimensions(inst), DimensionError);
}

// Regression: warm-started dual simplex once reported false infeasibility
// at branch-and-bound nodes, so the social optimum came back infeasible.
TEST(SscModelTest, EachObjectiveSolvesOnTinyInstance) {
  const TriObjectiveModel tm = build_model(instgen::generate(tiny_config()));
  const milp::Model relaxed = milp::relax_integrality(tm.model);
  milp::MilpOptions opt;
  opt.rel_gap = 1e-6;
  for (int k = 0; k < 3; ++k) {
    const milp::LpResult lp = milp::solve_lp(relaxed, tm.objective(k));
    ASSERT_EQ(lp.status, milp::LpStatus::kOptimal);
    for (bool dive : {true, false}) {
      opt.diving = dive;
      const milp::MilpResult r = milp::solve_milp(tm.model, tm.objective(k), opt);
      ASSERT_EQ(r.status, milp::MilpStatus::kOptimal) << "objective " << k;
      EXPECT_LE(lp.objective, r.objective + 1e-6 * std::max(1.0, std::abs(r.objective)));
      EXPECT_TRUE(validate_solution(tm.model, r.assignment).empty());
    }
  }
}

}  // namespace
}  // namespace sscopt::ssc
