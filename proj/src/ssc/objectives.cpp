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

// Objective coefficients. The cost structure is a reconstruction: revenue on
// deliveries, purchase, operating, holding, collection and transport costs
// discounted per period, minus one-off construction and technology costs.

#include <cmath>

#include "builder_util.hpp"

namespace sscopt::ssc {

void build_objectives(const SSCInstance& inst, TriObjectiveModel& tm) {
  const VariableCatalog& c = tm.catalog;
  const int T = inst.periods;
  const int nc = inst.n_categories;
  std::vector<milp::LinTerm> eco, env, soc;  // original sense

  for (int t = 0; t < T; ++t) {
    const double disc = std::pow(1.0 + inst.discount_rate, -(t + 1));
    for (const Lane& l : c.lanes) {
      const Entity& from = inst.entities[l.from];
      const Entity& to = inst.entities[l.to];
      const Mode& mode = inst.modes[l.mode];
      const double d = inst.dist[l.from][l.to];
      for (int item : l.items) {
        const int x = c.x(item, l.mode, l.from, l.to, t);
        double coef = 0.0;
        if (to.kind == EntityKind::kCustomer && item >= inst.final_item(0) && item < inst.recovered_item(0)) {
          coef += inst.psu[item - inst.n_raw];
        }
        if (from.kind == EntityKind::kSupplier) coef -= inst.rmc[item][l.from];
        if (to.kind == EntityKind::kFactory && item >= inst.recovered_item(0)) {
          coef -= inst.rpc[item - inst.recovered_item(0)];
        }
        if (mode.kind != ModeKind::kTruck) coef -= mode.tariff * d * inst.pw[item];
        if (coef != 0.0) eco.push_back({x, disc * coef});
        double impact = 0.0;
        for (int k = 0; k < nc; ++k) impact += inst.ei_mode[l.mode][k];
        if (impact != 0.0) env.push_back({x, impact * inst.pw[item]});
      }
      if (mode.kind == ModeKind::kTruck) {
        const double per_trip = mode.avc / 100.0 * d * inst.fuel_price;
        eco.push_back({c.q(l.mode, l.from, l.to, t), -disc * per_trip});
      }
    }
    for (int f : inst.entities_of(EntityKind::kFactory)) {
      auto prod = [&](const std::vector<TechUse>& uses, bool reman) {
        for (const TechUse& h : uses) {
          const int v = reman ? c.r(h.product, h.tech, f, t) : c.p(h.product, h.tech, f, t);
          eco.push_back({v, -disc * inst.techs[h.tech].opc});
          double impact = 0.0;
          for (int k = 0; k < nc; ++k) impact += inst.ei_tech[h.product][h.tech][k];
          env.push_back({v, impact});
        }
      };
      prod(inst.h_prod, false);
      prod(inst.h_rem, true);
    }
    for (int i = 0; i < inst.num_entities(); ++i) {
      if (!inst.entities[i].is_facility()) continue;
      for (int n = 0; n < inst.n_final; ++n) eco.push_back({c.s(n, i, t), -disc * inst.inv_cost[n]});
    }
  }

  double install_impact = 0.0;
  for (int k = 0; k < nc; ++k) install_impact += inst.ei_install[k];
  for (int i = 0; i < inst.num_entities(); ++i) {
    if (!inst.entities[i].is_facility()) continue;
    const int yc = c.yc(i);
    eco.push_back({yc, -inst.sqmc[i]});
    env.push_back({yc, install_impact});
    const double weight = inst.unemployment[i] / 100.0 / inst.gdp_index[i];
    soc.push_back({c.y(i), inst.workers[i] * weight});
    soc.push_back({yc, inst.workers_per_m2[i] * weight});
  }
  for (const auto& [key, z] : c.tech_vars()) {
    const auto [g, n, f] = key;
    (void)n;
    eco.push_back({z, -inst.techs[g].tec});
    soc.push_back({z, inst.techs[g].workers / inst.gdp_index[f]});
  }

  auto minimize = [](std::vector<milp::LinTerm> terms, double sign) {
    for (auto& t : terms) t.coef *= sign;
    return milp::LinObjective{milp::canonical_terms(std::move(terms)), 0.0};
  };
  tm.f_eco = minimize(std::move(eco), -1.0);
  tm.f_env = minimize(std::move(env), 1.0);
  tm.f_soc = minimize(std::move(soc), -1.0);
}

}  // namespace sscopt::ssc
