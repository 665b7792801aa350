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

// Relaxable block: every row ties flows, stocks, areas, trips, fleets or
// production to an installation or technology binary.

#include "builder_util.hpp"

namespace sscopt::ssc {

using milp::Block;
using milp::Sense;

void build_strategic_constraints(const SSCInstance& inst, TriObjectiveModel& tm) {
  const VariableCatalog& c = tm.catalog;
  milp::Model& m = tm.model;
  const Names nm(inst);
  const int T = inst.periods;
  const int ne = inst.num_entities();
  constexpr Block kR = Block::kRelaxable;
  Row row;

  // Supplier limits per raw material and period.
  for (int s : inst.entities_of(EntityKind::kSupplier)) {
    for (int rm = 0; rm < inst.n_raw; ++rm) {
      for (int t = 0; t < T; ++t) {
        const std::string idx = nm.item(rm) + "," + nm.entity(s) + "," + nm.period(t);
        for (int pass = 0; pass < 2; ++pass) {
          for (const Lane& l : c.lanes) {
            if (l.from == s) row.add(c.x(inst.raw_item(rm), l.mode, s, l.to, t), 1.0);
          }
          if (pass == 0) {
            row.add(c.y(s), -inst.sc_max[rm][s]);
            row.emit(m, Sense::kLessEqual, 0.0, kR, "supply_max(" + idx + ")");
          } else {
            row.add(c.y(s), -inst.sc_min[rm][s]);
            row.emit(m, Sense::kGreaterEqual, 0.0, kR, "supply_min(" + idx + ")");
          }
        }
      }
    }
  }

  // Total throughput caps; rows are only emitted where lanes exist.
  for (int i = 0; i < ne; ++i) {
    for (int t = 0; t < T; ++t) {
      const std::string idx = nm.entity(i) + "," + nm.period(t);
      for (const Lane& l : c.lanes) {
        if (l.from != i) continue;
        for (int item : l.items) row.add(c.x(item, l.mode, i, l.to, t), 1.0);
      }
      if (!row.terms.empty()) {
        row.add(c.y(i), -inst.ec_max[i]);
        row.emit(m, Sense::kLessEqual, 0.0, kR, "outflow_cap(" + idx + ")");
      }
      for (const Lane& l : c.lanes) {
        if (l.to != i) continue;
        for (int item : l.items) row.add(c.x(item, l.mode, l.from, i, t), 1.0);
      }
      if (!row.terms.empty()) {
        row.add(c.y(i), -inst.ec_max[i]);
        row.emit(m, Sense::kLessEqual, 0.0, kR, "inflow_cap(" + idx + ")");
      }
    }
  }

  for (int i = 0; i < ne; ++i) {
    if (!inst.entities[i].is_facility()) continue;
    for (int n = 0; n < inst.n_final; ++n) {
      for (int t = 0; t < T; ++t) {
        const std::string idx = nm.item(inst.final_item(n)) + "," + nm.entity(i) + "," + nm.period(t);
        row.add(c.s(n, i, t), 1.0);
        row.add(c.y(i), -inst.ic_max[n][i]);
        row.emit(m, Sense::kLessEqual, 0.0, kR, "stock_max(" + idx + ")");
        row.add(c.s(n, i, t), 1.0);
        row.add(c.y(i), -inst.ic_min[n][i]);
        row.emit(m, Sense::kGreaterEqual, 0.0, kR, "stock_min(" + idx + ")");
      }
    }
    row.add(c.yc(i), 1.0);
    row.add(c.y(i), -inst.ea_max[i]);
    row.emit(m, Sense::kLessEqual, 0.0, kR, "area_max(" + nm.entity(i) + ")");
    row.add(c.yc(i), 1.0);
    row.add(c.y(i), -inst.ea_min[i]);
    row.emit(m, Sense::kGreaterEqual, 0.0, kR, "area_min(" + nm.entity(i) + ")");
  }

  // An installed entity moves at least one unit in and one unit out over the
  // horizon; entities without lanes in that direction are skipped.
  for (int i = 0; i < ne; ++i) {
    for (const Lane& l : c.lanes) {
      if (l.to != i) continue;
      for (int t = 0; t < T; ++t) {
        for (int item : l.items) row.add(c.x(item, l.mode, l.from, i, t), 1.0);
      }
    }
    if (!row.terms.empty()) {
      row.add(c.y(i), -1.0);
      row.emit(m, Sense::kGreaterEqual, 0.0, kR, "min_inflow(" + nm.entity(i) + ")");
    }
    for (const Lane& l : c.lanes) {
      if (l.from != i || inst.entities[i].kind == EntityKind::kCustomer) continue;
      for (int t = 0; t < T; ++t) {
        for (int item : l.items) row.add(c.x(item, l.mode, i, l.to, t), 1.0);
      }
    }
    if (!row.terms.empty()) {
      row.add(c.y(i), -1.0);
      row.emit(m, Sense::kGreaterEqual, 0.0, kR, "min_outflow(" + nm.entity(i) + ")");
    }
  }

  for (const Lane& l : c.lanes) {
    const double big_m = trip_big_m(inst, l);
    for (int t = 0; t < T; ++t) {
      const std::string idx =
          nm.mode(l.mode) + "," + nm.entity(l.from) + "," + nm.entity(l.to) + "," + nm.period(t);
      const int q = c.q(l.mode, l.from, l.to, t);
      row.add(q, 1.0);
      row.add(c.y(l.from), -big_m);
      row.emit(m, Sense::kLessEqual, 0.0, kR, "trips_open_from(" + idx + ")");
      row.add(q, 1.0);
      row.add(c.y(l.to), -big_m);
      row.emit(m, Sense::kLessEqual, 0.0, kR, "trips_open_to(" + idx + ")");
    }
  }

  for (const auto& [key, kvar] : c.fleet_vars()) {
    const auto [a, i] = key;
    row.add(kvar, 1.0);
    row.add(c.y(i), -m.var(kvar).upper);
    row.emit(m, Sense::kLessEqual, 0.0, kR, "fleet_open(" + nm.mode(a) + "," + nm.entity(i) + ")");
  }

  for (int f : inst.entities_of(EntityKind::kFactory)) {
    auto levels = [&](const std::vector<TechUse>& uses, bool reman) {
      for (const TechUse& h : uses) {
        const Technology& g = inst.techs[h.tech];
        for (int t = 0; t < T; ++t) {
          const std::string idx = nm.item(inst.final_item(h.product)) + "," + nm.tech(h.tech) + "," +
                                  nm.entity(f) + "," + nm.period(t);
          const int v = reman ? c.r(h.product, h.tech, f, t) : c.p(h.product, h.tech, f, t);
          const int z = c.z(h.tech, h.product, f);
          row.add(v, 1.0);
          row.add(z, -g.pc_max);
          row.emit(m, Sense::kLessEqual, 0.0, kR, (reman ? "reman_max(" : "prod_max(") + idx + ")");
          row.add(v, 1.0);
          row.add(z, -g.pc_min);
          row.emit(m, Sense::kGreaterEqual, 0.0, kR, (reman ? "reman_min(" : "prod_min(") + idx + ")");
        }
      }
    };
    levels(inst.h_prod, false);
    levels(inst.h_rem, true);

    for (int n = 0; n < inst.n_final; ++n) {
      const std::string idx = nm.item(inst.final_item(n)) + "," + nm.entity(f);
      for (const TechUse& h : inst.h_prod) {
        if (h.product == n) row.add(c.z(h.tech, n, f), 1.0);
      }
      if (!row.terms.empty()) {
        row.add(c.y(f), -1.0);
        row.emit(m, Sense::kLessEqual, 0.0, kR, "one_prod_tech(" + idx + ")");
      }
      for (const TechUse& h : inst.h_rem) {
        if (h.product == n) row.add(c.z(h.tech, n, f), 1.0);
      }
      if (!row.terms.empty()) {
        row.add(c.y(f), -1.0);
        row.emit(m, Sense::kLessEqual, 0.0, kR, "one_reman_tech(" + idx + ")");
      }
    }
  }
}

}  // namespace sscopt::ssc
