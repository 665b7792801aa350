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

#include <algorithm>
#include <cmath>

#include "builder_util.hpp"
#include "sscopt/ssc/model.hpp"

namespace sscopt::ssc {

using milp::VarDomain;

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k < hi; ++k) v.push_back(k);
  return v;
}

}  // namespace

std::vector<Lane> build_lanes(const SSCInstance& inst) {
  const std::vector<int> raw = range(0, inst.n_raw);
  const std::vector<int> fin = range(inst.final_item(0), inst.final_item(inst.n_final));
  const std::vector<int> rec = range(inst.recovered_item(0), inst.recovered_item(inst.n_final));
  std::vector<int> fin_rec = fin;
  fin_rec.insert(fin_rec.end(), rec.begin(), rec.end());

  // Items a truck may carry from one entity kind to another.
  auto truck_items = [&](const Entity& a, const Entity& b) -> std::vector<int> {
    using K = EntityKind;
    const bool hub_b = b.is_hub();
    const bool hub_a = a.is_hub();
    std::vector<int> out;
    auto add = [&](const std::vector<int>& v) { out.insert(out.end(), v.begin(), v.end()); };
    if (a.kind == K::kSupplier && b.kind == K::kFactory) add(raw);
    // forward flow of final products
    if ((a.kind == K::kFactory && (b.kind == K::kWarehouse || b.kind == K::kCustomer || hub_b)) ||
        (a.kind == K::kWarehouse && (b.kind == K::kCustomer || hub_b)) ||
        (hub_a && (b.kind == K::kWarehouse || b.kind == K::kCustomer))) {
      add(fin);
    }
    // reverse flow of recovered products
    if ((a.kind == K::kCustomer && (b.kind == K::kFactory || b.kind == K::kWarehouse || hub_b)) ||
        (a.kind == K::kWarehouse && (b.kind == K::kFactory || hub_b)) ||
        (hub_a && (b.kind == K::kFactory || b.kind == K::kWarehouse))) {
      add(rec);
    }
    return out;
  };

  std::vector<Lane> lanes;
  const int ne = inst.num_entities();
  for (int a = 0; a < static_cast<int>(inst.modes.size()); ++a) {
    const ModeKind mk = inst.modes[a].kind;
    for (int i = 0; i < ne; ++i) {
      for (int j = 0; j < ne; ++j) {
        if (i == j) continue;
        const Entity& ei = inst.entities[i];
        const Entity& ej = inst.entities[j];
        std::vector<int> items;
        if (mk == ModeKind::kTruck) {
          if (ei.continent == ej.continent) items = truck_items(ei, ej);
        } else {
          const EntityKind hub = mk == ModeKind::kPlane ? EntityKind::kAirport : EntityKind::kSeaport;
          if (ei.kind == hub && ej.kind == hub) items = fin_rec;
        }
        if (!items.empty()) lanes.push_back({a, i, j, std::move(items)});
      }
    }
  }
  return lanes;
}

double trip_big_m(const SSCInstance& inst, const Lane& lane) {
  double max_pw = 0.0;
  for (int m : lane.items) max_pw = std::max(max_pw, inst.pw[m]);
  const double units = std::min(inst.ec_max[lane.from], inst.ec_max[lane.to]);
  return std::max(1.0, std::ceil(units * max_pw / inst.modes[lane.mode].vcap - 1e-9));
}

void ModelBuilder::build_catalog(const SSCInstance& inst, TriObjectiveModel& tm) {
  VariableCatalog& c = tm.catalog;
  milp::Model& m = tm.model;
  const int T = inst.periods;
  const int ne = inst.num_entities();
  const Names nm(inst);

  for (int i = 0; i < ne; ++i) {
    c.y_[{i}] = m.add_var("Y(" + nm.entity(i) + ")", VarDomain::kBinary, 0.0, 1.0);
    tm.relaxed_binaries.push_back(c.y_[{i}]);
  }
  for (int i = 0; i < ne; ++i) {
    if (!inst.entities[i].is_facility()) continue;
    c.yc_[{i}] = m.add_var("YC(" + nm.entity(i) + ")", VarDomain::kContinuous, 0.0, milp::kInf);
    for (int t = 0; t < T; ++t) {
      c.yct_[{i, t}] = m.add_var(tag("YCT", {nm.entity(i), nm.period(t)}), VarDomain::kContinuous, 0.0, milp::kInf);
      for (int n = 0; n < inst.n_final; ++n) {
        c.s_[{n, i, t}] = m.add_var(tag("S", {nm.item(inst.final_item(n)), nm.entity(i), nm.period(t)}),
                                    VarDomain::kContinuous, 0.0, milp::kInf);
      }
    }
  }
  for (int f : inst.entities_of(EntityKind::kFactory)) {
    auto add_tech = [&](const std::vector<TechUse>& uses, auto& target, const char* prefix) {
      for (const TechUse& h : uses) {
        if (!c.z_.count({h.tech, h.product, f})) {
          c.z_[{h.tech, h.product, f}] = m.add_var(
              tag("Z", {nm.tech(h.tech), nm.item(inst.final_item(h.product)), nm.entity(f)}),
              VarDomain::kBinary, 0.0, 1.0);
        }
        for (int t = 0; t < T; ++t) {
          target[{h.product, h.tech, f, t}] = m.add_var(
              tag(prefix, {nm.item(inst.final_item(h.product)), nm.tech(h.tech), nm.entity(f), nm.period(t)}),
              VarDomain::kContinuous, 0.0, milp::kInf);
        }
      }
    };
    add_tech(inst.h_prod, c.p_, "P");
    add_tech(inst.h_rem, c.r_, "R");
  }

  c.lanes = build_lanes(inst);
  for (const Lane& l : c.lanes) {
    const double big_m = trip_big_m(inst, l);
    for (int t = 0; t < T; ++t) {
      for (int item : l.items) {
        const int v = m.add_var(
            tag("X", {nm.item(item), nm.mode(l.mode), nm.entity(l.from), nm.entity(l.to), nm.period(t)}),
            VarDomain::kContinuous, 0.0, milp::kInf);
        c.x_[{item, l.mode, l.from, l.to, t}] = v;
        c.flow_vars_.push_back(v);
      }
      c.q_[{l.mode, l.from, l.to, t}] =
          m.add_var(tag("Q", {nm.mode(l.mode), nm.entity(l.from), nm.entity(l.to), nm.period(t)}),
                    VarDomain::kInteger, 0.0, big_m);
    }
  }

  // Truck fleets at every entity that sends by truck.
  for (int a = 0; a < static_cast<int>(inst.modes.size()); ++a) {
    if (inst.modes[a].kind != ModeKind::kTruck) continue;
    for (int i = 0; i < ne; ++i) {
      const double cap = fleet_big_m(inst, c.lanes, a, i);
      if (cap <= 0.0) continue;
      c.k_[{a, i}] = m.add_var(tag("K", {nm.mode(a), nm.entity(i)}), VarDomain::kInteger, 0.0, cap);
      for (int t = 0; t < T; ++t) {
        c.kt_[{a, i, t}] = m.add_var(tag("KT", {nm.mode(a), nm.entity(i), nm.period(t)}),
                                     VarDomain::kContinuous, 0.0, milp::kInf);
      }
    }
  }
}

double fleet_big_m(const SSCInstance& inst, const std::vector<Lane>& lanes, int mode, int i) {
  double trips = 0.0;
  bool any = false;
  for (const Lane& l : lanes) {
    if (l.mode == mode && l.from == i) {
      trips += trip_big_m(inst, l);
      any = true;
    }
  }
  if (!any) return 0.0;
  return std::max(1.0, std::ceil(trips / inst.modes[mode].ntrips - 1e-9));
}

TriObjectiveModel build_model(const SSCInstance& inst) {
  check_dimensions(inst);
  TriObjectiveModel tm;
  ModelBuilder::build_catalog(inst, tm);
  build_tactical_constraints(inst, tm);
  build_strategic_constraints(inst, tm);
  build_objectives(inst, tm);
  return tm;
}

ObjectiveValues evaluate_objectives(const TriObjectiveModel& tm, std::span<const double> x) {
  return {tm.f_eco.evaluate(x), tm.f_env.evaluate(x), tm.f_soc.evaluate(x)};
}

std::vector<Violation> validate_solution(const milp::Model& model, std::span<const double> x, double tol) {
  std::vector<Violation> out;
  if (x.size() != model.num_vars()) {
    out.push_back({"assignment length", std::abs(static_cast<double>(x.size()) - model.num_vars())});
    return out;
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    const milp::VarSpec& v = model.var(static_cast<int>(j));
    const double scale = std::max(1.0, std::abs(x[j]));
    const double below = v.lower - x[j];
    const double above = x[j] - v.upper;
    if (below > tol * scale) out.push_back({v.id, below});
    if (above > tol * scale) out.push_back({v.id, above});
    if (v.is_integral()) {
      const double frac = std::abs(x[j] - std::round(x[j]));
      if (frac > milp::kIntTol) out.push_back({v.id + " integrality", frac});
    }
  }
  for (const milp::LinConstraint& r : model.constraints()) {
    double scale = std::max(1.0, std::abs(r.rhs));
    for (const milp::LinTerm& t : r.terms) scale = std::max(scale, std::abs(t.coef * x[t.var]));
    const double viol = r.violation(x);
    if (viol > tol * scale) out.push_back({r.label, viol});
  }
  return out;
}

}  // namespace sscopt::ssc
