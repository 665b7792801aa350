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

#include "sscopt/ssc/instance.hpp"

#include <sstream>

namespace sscopt::ssc {

using nlohmann::json;

const char* to_string(EntityKind k) {
  switch (k) {
    case EntityKind::kSupplier: return "supplier";
    case EntityKind::kFactory: return "factory";
    case EntityKind::kWarehouse: return "warehouse";
    case EntityKind::kCustomer: return "customer";
    case EntityKind::kAirport: return "airport";
    case EntityKind::kSeaport: return "seaport";
  }
  return "?";
}

const char* to_string(ModeKind k) {
  switch (k) {
    case ModeKind::kTruck: return "truck";
    case ModeKind::kPlane: return "plane";
    case ModeKind::kBoat: return "boat";
  }
  return "?";
}

namespace {

EntityKind entity_kind(const std::string& s) {
  for (EntityKind k : {EntityKind::kSupplier, EntityKind::kFactory, EntityKind::kWarehouse,
                       EntityKind::kCustomer, EntityKind::kAirport, EntityKind::kSeaport}) {
    if (s == to_string(k)) return k;
  }
  throw DimensionError("unknown entity kind " + s);
}

ModeKind mode_kind(const std::string& s) {
  for (ModeKind k : {ModeKind::kTruck, ModeKind::kPlane, ModeKind::kBoat}) {
    if (s == to_string(k)) return k;
  }
  throw DimensionError("unknown mode kind " + s);
}

template <typename T>
void expect_size(const std::vector<T>& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    std::ostringstream os;
    os << what << " has " << v.size() << " entries, expected " << n;
    throw DimensionError(os.str());
  }
}

template <typename T>
void expect_matrix(const std::vector<std::vector<T>>& v, std::size_t a, std::size_t b, const char* what) {
  expect_size(v, a, what);
  for (const auto& row : v) expect_size(row, b, what);
}

template <typename T>
void expect_cube(const std::vector<std::vector<std::vector<T>>>& v, std::size_t a, std::size_t b,
                 std::size_t c, const char* what) {
  expect_size(v, a, what);
  for (const auto& m : v) expect_matrix(m, b, c, what);
}

}  // namespace

std::vector<int> SSCInstance::entities_of(EntityKind k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < entities.size(); ++i) {
    if (entities[i].kind == k) out.push_back(static_cast<int>(i));
  }
  return out;
}

double SSCInstance::period_demand(int n, int t) const {
  double s = 0.0;
  for (const auto& per_entity : dmd.at(n)) s += per_entity.at(t);
  return s;
}

void check_dimensions(const SSCInstance& inst) {
  if (inst.periods <= 0) throw DimensionError("periods must be positive");
  if (inst.n_raw <= 0 || inst.n_final <= 0) throw DimensionError("need raw and final products");
  const std::size_t ne = inst.entities.size();
  const std::size_t nt = inst.techs.size();
  const std::size_t nm = inst.modes.size();
  const std::size_t nc = static_cast<std::size_t>(inst.n_categories);
  const std::size_t nr = static_cast<std::size_t>(inst.n_raw);
  const std::size_t nf = static_cast<std::size_t>(inst.n_final);
  expect_size(inst.pw, static_cast<std::size_t>(inst.n_items()), "pw");
  expect_size(inst.apu, static_cast<std::size_t>(inst.n_items()), "apu");
  expect_cube(inst.dmd, nf, ne, static_cast<std::size_t>(inst.periods), "dmd");
  expect_cube(inst.bom_prod, nr, nf, nt, "bom_prod");
  for (auto* v : {&inst.bom_rem, &inst.ret_frac, &inst.psu, &inst.inv_cost, &inst.rpc}) {
    expect_size(*v, nf, "final-product parameter");
  }
  expect_matrix(inst.rmc, nr, ne, "rmc");
  expect_matrix(inst.sc_max, nr, ne, "sc_max");
  expect_matrix(inst.sc_min, nr, ne, "sc_min");
  expect_matrix(inst.ic_max, nf, ne, "ic_max");
  expect_matrix(inst.ic_min, nf, ne, "ic_min");
  for (auto* v : {&inst.ea_max, &inst.ea_min, &inst.ec_max, &inst.lc, &inst.sqmc, &inst.gdp_index,
                  &inst.unemployment, &inst.workers, &inst.workers_per_m2}) {
    expect_size(*v, ne, "entity parameter");
  }
  expect_matrix(inst.dist, ne, ne, "dist");
  expect_size(inst.ei_install, nc, "ei_install");
  expect_cube(inst.ei_tech, nf, nt, nc, "ei_tech");
  expect_matrix(inst.ei_mode, nm, nc, "ei_mode");
  for (const TechUse& h : inst.h_prod) {
    if (h.product < 0 || h.product >= inst.n_final || h.tech < 0 || h.tech >= static_cast<int>(nt) ||
        inst.techs[h.tech].remanufacturing) {
      throw DimensionError("bad production technology pair");
    }
  }
  for (const TechUse& h : inst.h_rem) {
    if (h.product < 0 || h.product >= inst.n_final || h.tech < 0 || h.tech >= static_cast<int>(nt) ||
        !inst.techs[h.tech].remanufacturing) {
      throw DimensionError("bad remanufacturing technology pair");
    }
  }
  for (const Entity& e : inst.entities) {
    if (e.continent < 0) throw DimensionError("negative continent id");
  }
  for (const auto& gdp : inst.gdp_index) {
    if (gdp < 0.0) throw DimensionError("negative GDP index");
  }
}

json to_json(const SSCInstance& inst) {
  json j;
  j["schema"] = "sscopt-instance";
  j["version"] = SSCInstance::kSchemaVersion;
  j["seed"] = inst.seed;
  j["profile"] = inst.profile;
  j["periods"] = inst.periods;
  j["n_raw"] = inst.n_raw;
  j["n_final"] = inst.n_final;
  j["n_categories"] = inst.n_categories;
  json ents = json::array();
  for (const Entity& e : inst.entities) {
    ents.push_back({{"kind", to_string(e.kind)}, {"continent", e.continent}, {"name", e.name}});
  }
  j["entities"] = ents;
  json modes = json::array();
  for (const Mode& m : inst.modes) {
    modes.push_back({{"kind", to_string(m.kind)}, {"name", m.name}, {"vcap", m.vcap},
                     {"ntrips", m.ntrips}, {"avc", m.avc}, {"tariff", m.tariff}});
  }
  j["modes"] = modes;
  json techs = json::array();
  for (const Technology& t : inst.techs) {
    techs.push_back({{"remanufacturing", t.remanufacturing}, {"pc_max", t.pc_max},
                     {"pc_min", t.pc_min}, {"tec", t.tec}, {"opc", t.opc}, {"workers", t.workers}});
  }
  j["techs"] = techs;
  auto pairs = [](const std::vector<TechUse>& v) {
    json a = json::array();
    for (const TechUse& h : v) a.push_back({h.product, h.tech});
    return a;
  };
  j["h_prod"] = pairs(inst.h_prod);
  j["h_rem"] = pairs(inst.h_rem);
  j["pw"] = inst.pw;
  j["apu"] = inst.apu;
  j["dmd"] = inst.dmd;
  j["bom_prod"] = inst.bom_prod;
  j["bom_rem"] = inst.bom_rem;
  j["ret_frac"] = inst.ret_frac;
  j["psu"] = inst.psu;
  j["inv_cost"] = inst.inv_cost;
  j["rpc"] = inst.rpc;
  j["rmc"] = inst.rmc;
  j["sc_max"] = inst.sc_max;
  j["sc_min"] = inst.sc_min;
  j["ic_max"] = inst.ic_max;
  j["ic_min"] = inst.ic_min;
  j["ea_max"] = inst.ea_max;
  j["ea_min"] = inst.ea_min;
  j["ec_max"] = inst.ec_max;
  j["dist"] = inst.dist;
  j["lc"] = inst.lc;
  j["sqmc"] = inst.sqmc;
  j["gdp_index"] = inst.gdp_index;
  j["unemployment"] = inst.unemployment;
  j["workers"] = inst.workers;
  j["workers_per_m2"] = inst.workers_per_m2;
  j["ei_install"] = inst.ei_install;
  j["ei_tech"] = inst.ei_tech;
  j["ei_mode"] = inst.ei_mode;
  j["fuel_price"] = inst.fuel_price;
  j["discount_rate"] = inst.discount_rate;
  return j;
}

SSCInstance instance_from_json(const json& j) {
  if (j.value("schema", "") != "sscopt-instance") throw DimensionError("not an sscopt instance");
  if (j.at("version").get<int>() != SSCInstance::kSchemaVersion) {
    throw DimensionError("unsupported instance version");
  }
  SSCInstance inst;
  inst.seed = j.at("seed").get<std::uint64_t>();
  inst.profile = j.at("profile").get<std::string>();
  inst.periods = j.at("periods").get<int>();
  inst.n_raw = j.at("n_raw").get<int>();
  inst.n_final = j.at("n_final").get<int>();
  inst.n_categories = j.at("n_categories").get<int>();
  for (const json& e : j.at("entities")) {
    inst.entities.push_back({entity_kind(e.at("kind").get<std::string>()), e.at("continent").get<int>(),
                             e.at("name").get<std::string>()});
  }
  for (const json& m : j.at("modes")) {
    inst.modes.push_back({mode_kind(m.at("kind").get<std::string>()), m.at("name").get<std::string>(),
                          m.at("vcap").get<double>(), m.at("ntrips").get<double>(),
                          m.at("avc").get<double>(), m.at("tariff").get<double>()});
  }
  for (const json& t : j.at("techs")) {
    inst.techs.push_back({t.at("remanufacturing").get<bool>(), t.at("pc_max").get<double>(),
                          t.at("pc_min").get<double>(), t.at("tec").get<double>(),
                          t.at("opc").get<double>(), t.at("workers").get<double>()});
  }
  for (const json& h : j.at("h_prod")) inst.h_prod.push_back({h.at(0).get<int>(), h.at(1).get<int>()});
  for (const json& h : j.at("h_rem")) inst.h_rem.push_back({h.at(0).get<int>(), h.at(1).get<int>()});
  j.at("pw").get_to(inst.pw);
  j.at("apu").get_to(inst.apu);
  j.at("dmd").get_to(inst.dmd);
  j.at("bom_prod").get_to(inst.bom_prod);
  j.at("bom_rem").get_to(inst.bom_rem);
  j.at("ret_frac").get_to(inst.ret_frac);
  j.at("psu").get_to(inst.psu);
  j.at("inv_cost").get_to(inst.inv_cost);
  j.at("rpc").get_to(inst.rpc);
  j.at("rmc").get_to(inst.rmc);
  j.at("sc_max").get_to(inst.sc_max);
  j.at("sc_min").get_to(inst.sc_min);
  j.at("ic_max").get_to(inst.ic_max);
  j.at("ic_min").get_to(inst.ic_min);
  j.at("ea_max").get_to(inst.ea_max);
  j.at("ea_min").get_to(inst.ea_min);
  j.at("ec_max").get_to(inst.ec_max);
  j.at("dist").get_to(inst.dist);
  j.at("lc").get_to(inst.lc);
  j.at("sqmc").get_to(inst.sqmc);
  j.at("gdp_index").get_to(inst.gdp_index);
  j.at("unemployment").get_to(inst.unemployment);
  j.at("workers").get_to(inst.workers);
  j.at("workers_per_m2").get_to(inst.workers_per_m2);
  j.at("ei_install").get_to(inst.ei_install);
  j.at("ei_tech").get_to(inst.ei_tech);
  j.at("ei_mode").get_to(inst.ei_mode);
  inst.fuel_price = j.at("fuel_price").get<double>();
  inst.discount_rate = j.at("discount_rate").get<double>();
  check_dimensions(inst);
  return inst;
}

}  // namespace sscopt::ssc
