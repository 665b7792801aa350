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

// Kept block: a minimal consistent flow, production and fleet core. These
// rows are a reconstruction; every label carries the "rec_" prefix so the
// whole family can be swapped out without touching the algorithms.

#include "builder_util.hpp"

namespace sscopt::ssc {

using milp::Block;
using milp::Sense;

namespace {

class FlowTerms {
 public:
  explicit FlowTerms(const VariableCatalog& c) : c_(c) {}

  void inflow(Row& row, int item, int j, int t, double coef) const {
    for (const Lane& l : c_.lanes) {
      if (l.to == j) row.add(c_.x(item, l.mode, l.from, j, t), coef);
    }
  }
  void outflow(Row& row, int item, int i, int t, double coef) const {
    for (const Lane& l : c_.lanes) {
      if (l.from == i) row.add(c_.x(item, l.mode, i, l.to, t), coef);
    }
  }

 private:
  const VariableCatalog& c_;
};

}  // namespace

void build_tactical_constraints(const SSCInstance& inst, TriObjectiveModel& tm) {
  const VariableCatalog& c = tm.catalog;
  milp::Model& m = tm.model;
  const Names nm(inst);
  const FlowTerms flow(c);
  const int T = inst.periods;
  Row row;

  for (int f : inst.entities_of(EntityKind::kFactory)) {
    for (int t = 0; t < T; ++t) {
      // Raw materials arriving are consumed by production in the same period.
      for (int rm = 0; rm < inst.n_raw; ++rm) {
        flow.inflow(row, inst.raw_item(rm), f, t, 1.0);
        for (const TechUse& h : inst.h_prod) {
          row.add(c.p(h.product, h.tech, f, t), -inst.bom_prod[rm][h.product][h.tech]);
        }
        row.emit(m, Sense::kEqual, 0.0, Block::kKept, tag("rec_raw_balance", {nm.item(rm), nm.entity(f), nm.period(t)}));
      }
      for (int n = 0; n < inst.n_final; ++n) {
        const int fp = inst.final_item(n);
        for (const TechUse& h : inst.h_prod) {
          if (h.product == n) row.add(c.p(n, h.tech, f, t), 1.0);
        }
        for (const TechUse& h : inst.h_rem) {
          if (h.product == n) row.add(c.r(n, h.tech, f, t), 1.0);
        }
        if (t > 0) row.add(c.s(n, f, t - 1), 1.0);
        row.add(c.s(n, f, t), -1.0);
        flow.outflow(row, fp, f, t, -1.0);
        row.emit(m, Sense::kEqual, 0.0, Block::kKept, tag("rec_factory_balance", {nm.item(fp), nm.entity(f), nm.period(t)}));

        // Remanufacturing draws on recovered products delivered this period;
        // any surplus is disposed of.
        const int rp = inst.recovered_item(n);
        for (const TechUse& h : inst.h_rem) {
          if (h.product == n) row.add(c.r(n, h.tech, f, t), inst.bom_rem[n]);
        }
        flow.inflow(row, rp, f, t, -1.0);
        row.emit(m, Sense::kLessEqual, 0.0, Block::kKept, tag("rec_reman_input", {nm.item(rp), nm.entity(f), nm.period(t)}));
      }
    }
  }

  for (int w : inst.entities_of(EntityKind::kWarehouse)) {
    for (int t = 0; t < T; ++t) {
      for (int n = 0; n < inst.n_final; ++n) {
        const int fp = inst.final_item(n);
        flow.inflow(row, fp, w, t, 1.0);
        if (t > 0) row.add(c.s(n, w, t - 1), 1.0);
        row.add(c.s(n, w, t), -1.0);
        flow.outflow(row, fp, w, t, -1.0);
        row.emit(m, Sense::kEqual, 0.0, Block::kKept, tag("rec_warehouse_balance", {nm.item(fp), nm.entity(w), nm.period(t)}));

        const int rp = inst.recovered_item(n);
        flow.inflow(row, rp, w, t, 1.0);
        flow.outflow(row, rp, w, t, -1.0);
        row.emit(m, Sense::kEqual, 0.0, Block::kKept, tag("rec_reverse_passthrough", {nm.item(rp), nm.entity(w), nm.period(t)}));
      }
    }
  }

  for (int cu : inst.entities_of(EntityKind::kCustomer)) {
    for (int t = 0; t < T; ++t) {
      for (int n = 0; n < inst.n_final; ++n) {
        const int fp = inst.final_item(n);
        flow.inflow(row, fp, cu, t, 1.0);
        if (!row.emit(m, Sense::kEqual, inst.dmd[n][cu][t], Block::kKept,
                      tag("rec_demand", {nm.item(fp), nm.entity(cu), nm.period(t)})) &&
            inst.dmd[n][cu][t] > 0.0) {
          throw DimensionError("customer " + nm.entity(cu) + " has demand but no incoming lane");
        }

        // Products delivered in t-1 come back as recovered products in t.
        const int rp = inst.recovered_item(n);
        flow.outflow(row, rp, cu, t, 1.0);
        if (t > 0) flow.inflow(row, fp, cu, t - 1, -inst.ret_frac[n]);
        row.emit(m, Sense::kEqual, 0.0, Block::kKept, tag("rec_returns", {nm.item(rp), nm.entity(cu), nm.period(t)}));
      }
    }
  }

  for (int h = 0; h < inst.num_entities(); ++h) {
    if (!inst.entities[h].is_hub()) continue;
    for (int t = 0; t < T; ++t) {
      for (int item = inst.final_item(0); item < inst.n_items(); ++item) {
        flow.inflow(row, item, h, t, 1.0);
        flow.outflow(row, item, h, t, -1.0);
        row.emit(m, Sense::kEqual, 0.0, Block::kKept, tag("rec_hub_balance", {nm.item(item), nm.entity(h), nm.period(t)}));
      }
    }
  }

  for (int i = 0; i < inst.num_entities(); ++i) {
    if (!inst.entities[i].is_facility()) continue;
    for (int t = 0; t < T; ++t) {
      for (int n = 0; n < inst.n_final; ++n) row.add(c.s(n, i, t), inst.apu[inst.final_item(n)]);
      row.add(c.yct(i, t), -1.0);
      row.emit(m, Sense::kEqual, 0.0, Block::kKept, tag("rec_area_use", {nm.entity(i), nm.period(t)}));
      row.add(c.yct(i, t), 1.0);
      row.add(c.yc(i), -1.0);
      row.emit(m, Sense::kLessEqual, 0.0, Block::kKept, tag("rec_area_cap", {nm.entity(i), nm.period(t)}));
    }
  }

  for (const Lane& l : c.lanes) {
    for (int t = 0; t < T; ++t) {
      for (int item : l.items) row.add(c.x(item, l.mode, l.from, l.to, t), inst.pw[item]);
      row.add(c.q(l.mode, l.from, l.to, t), -inst.modes[l.mode].vcap);
      row.emit(m, Sense::kLessEqual, 0.0, Block::kKept,
               tag("rec_trip_cap", {nm.mode(l.mode), nm.entity(l.from), nm.entity(l.to), nm.period(t)}));
    }
  }

  for (const auto& [key, kvar] : c.fleet_vars()) {
    const auto [a, i] = key;
    for (int t = 0; t < T; ++t) {
      for (const Lane& l : c.lanes) {
        if (l.mode == a && l.from == i) row.add(c.q(a, i, l.to, t), 1.0);
      }
      row.add(c.kt(a, i, t), -inst.modes[a].ntrips);
      row.emit(m, Sense::kLessEqual, 0.0, Block::kKept, tag("rec_fleet_trips", {nm.mode(a), nm.entity(i), nm.period(t)}));
      row.add(c.kt(a, i, t), 1.0);
      row.add(kvar, -1.0);
      row.emit(m, Sense::kLessEqual, 0.0, Block::kKept, tag("rec_fleet_size", {nm.mode(a), nm.entity(i), nm.period(t)}));
    }
  }
}

}  // namespace sscopt::ssc
