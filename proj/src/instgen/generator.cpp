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

#include "sscopt/instgen/generator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>
#include <vector>

namespace sscopt::instgen {

using ssc::Entity;
using ssc::EntityKind;
using ssc::Mode;
using ssc::ModeKind;
using ssc::SSCInstance;
using ssc::Technology;
using ssc::TechUse;

const char* to_string(Profile p) {
  switch (p) {
    case Profile::kStd: return "STD";
    case Profile::kTechc: return "TECHC";
    case Profile::kRawc: return "RAWC";
    case Profile::kSup: return "SUP";
    case Profile::kCap: return "CAP";
  }
  return "?";
}

Profile profile_from_string(const std::string& s) {
  for (Profile p : {Profile::kStd, Profile::kTechc, Profile::kRawc, Profile::kSup, Profile::kCap}) {
    if (s == to_string(p)) return p;
  }
  throw ConfigError("unknown profile " + s);
}

namespace {

using Field = std::variant<double*, int*, bool*, std::uint64_t*>;

std::vector<std::pair<std::string, Field>> fields(GenConfig& c) {
  return {
      {"seed", &c.seed},
      {"suppliers", &c.suppliers}, {"factories", &c.factories}, {"warehouses", &c.warehouses},
      {"customers", &c.customers}, {"airports", &c.airports}, {"seaports", &c.seaports},
      {"raw_materials", &c.raw_materials}, {"final_products", &c.final_products},
      {"prod_techs", &c.prod_techs}, {"rem_techs", &c.rem_techs}, {"trucks", &c.trucks},
      {"periods", &c.periods}, {"categories", &c.categories}, {"overseas", &c.overseas},
      {"lbdc", &c.lbdc}, {"ubdc", &c.ubdc}, {"vart", &c.vart},
      {"lbbom_prod", &c.lbbom_prod}, {"ubbom_prod", &c.ubbom_prod},
      {"lbbom_rem", &c.lbbom_rem}, {"ubbom_rem", &c.ubbom_rem},
      {"lbpw", &c.lbpw}, {"ubpw", &c.ubpw}, {"lbapu", &c.lbapu}, {"ubapu", &c.ubapu},
      {"ubret", &c.ubret}, {"fracwg", &c.fracwg},
      {"icfrac_max", &c.icfrac_max}, {"icfrac_min", &c.icfrac_min}, {"lbpc_min", &c.lbpc_min},
      {"lbeaf_max", &c.lbeaf_max}, {"ubeaf_max", &c.ubeaf_max},
      {"lbeaf_min", &c.lbeaf_min}, {"ubeaf_min", &c.ubeaf_min},
      {"lbeaw_max", &c.lbeaw_max}, {"ubeaw_max", &c.ubeaw_max},
      {"lbeaw_min", &c.lbeaw_min}, {"ubeaw_min", &c.ubeaw_min},
      {"lbsc", &c.lbsc}, {"ubsc", &c.ubsc}, {"lbdist", &c.lbdist}, {"ubdist", &c.ubdist},
      {"lbtec", &c.lbtec}, {"ubtec", &c.ubtec}, {"lbopc", &c.lbopc}, {"ubopc", &c.ubopc},
      {"lbpsu", &c.lbpsu}, {"ubpsu", &c.ubpsu}, {"scfrac", &c.scfrac},
      {"lbrpc", &c.lbrpc}, {"ubrpc", &c.ubrpc}, {"lbrmc", &c.lbrmc}, {"ubrmc", &c.ubrmc},
      {"ubsqmc", &c.ubsqmc}, {"sqmcfac", &c.sqmcfac},
      {"lbwf", &c.lbwf}, {"ubwf", &c.ubwf}, {"lbww", &c.lbww}, {"ubww", &c.ubww},
      {"lbwpsqf", &c.lbwpsqf}, {"ubwpsqf", &c.ubwpsqf}, {"lbwpsqw", &c.lbwpsqw}, {"ubwpsqw", &c.ubwpsqw},
      {"vcapfrac_truck", &c.vcapfrac_truck}, {"vcapfrac_plane", &c.vcapfrac_plane},
      {"vcapfrac_boat", &c.vcapfrac_boat}, {"ntrips", &c.ntrips}, {"fuel_price", &c.fuel_price},
      {"discount_rate", &c.discount_rate}, {"tariff_plane", &c.tariff_plane}, {"tariff_boat", &c.tariff_boat},
  };
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

void set_field(const Field& f, const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    if (auto* d = std::get_if<double*>(&f)) {
      **d = std::stod(value, &used);
    } else if (auto* i = std::get_if<int*>(&f)) {
      **i = std::stoi(value, &used);
    } else if (auto* u = std::get_if<std::uint64_t*>(&f)) {
      **u = std::stoull(value, &used);
    } else if (auto* b = std::get_if<bool*>(&f)) {
      if (value == "true" || value == "1") **b = true;
      else if (value == "false" || value == "0") **b = false;
      else throw std::invalid_argument(value);
      used = value.size();
    }
    if (used != value.size()) throw std::invalid_argument(value);
  } catch (const std::logic_error&) {
    throw ConfigError("bad value for " + key + ": " + value);
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

void GenConfig::validate() const {
  require(suppliers >= 1 && factories >= 1 && customers >= 1, "need at least one supplier, factory and customer");
  require(warehouses >= 0 && airports >= 0 && seaports >= 0, "entity counts must be nonnegative");
  require(raw_materials >= 1 && final_products >= 1, "need raw materials and final products");
  require(prod_techs >= 1 && rem_techs >= 0 && trucks >= 1, "need a production technology and a truck");
  require(periods >= 1, "periods must be positive");
  require(categories >= 1, "categories must be positive");
  const std::pair<double, double> pairs[] = {
      {lbdc, ubdc}, {lbbom_prod, ubbom_prod}, {lbbom_rem, ubbom_rem}, {lbpw, ubpw}, {lbapu, ubapu},
      {lbeaf_max, ubeaf_max}, {lbeaf_min, ubeaf_min}, {lbeaw_max, ubeaw_max}, {lbeaw_min, ubeaw_min},
      {lbsc, ubsc}, {lbdist, ubdist}, {lbtec, ubtec}, {lbopc, ubopc}, {lbpsu, ubpsu}, {lbrpc, ubrpc},
      {lbrmc, ubrmc}, {lbwf, ubwf}, {lbww, ubww}, {lbwpsqf, ubwpsqf}, {lbwpsqw, ubwpsqw}};
  for (const auto& [lo, hi] : pairs) {
    require(lo >= 0.0 && lo <= hi, "interval bounds must satisfy 0 <= lb <= ub");
  }
  require(ubeaf_min <= lbeaf_max && ubeaw_min <= lbeaw_max, "minimum areas must not exceed maximum areas");
  require(vart >= 0.0 && vart <= 1.0, "vart must lie in [0, 1]");
  require(ubret >= 0.0 && ubret <= 1.0, "ubret must lie in [0, 1]");
  require(ubrpc <= 0.5, "ubrpc must be at most 0.5");
  require(icfrac_min >= 0.0 && icfrac_min <= 1.0 && lbpc_min >= 0.0 && lbpc_min <= 1.0,
          "minimum fractions must lie in [0, 1]");
  require(ubsc <= 1.0, "ubsc must be at most 1");
  require(vcapfrac_truck > 0 && vcapfrac_plane > 0 && vcapfrac_boat > 0 && ntrips > 0,
          "vehicle capacities and trip counts must be positive");
  require(discount_rate > -1.0, "discount rate must exceed -1");
}

GenConfig parse_config(const std::string& text, GenConfig base) {
  auto table = fields(base);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "version") {
      if (value != "1") throw ConfigError("unsupported config version " + value);
      continue;
    }
    if (key == "profile") {
      base.profile = profile_from_string(value);
      continue;
    }
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& kv) { return kv.first == key; });
    if (it == table.end()) throw ConfigError("line " + std::to_string(lineno) + ": unknown key " + key);
    set_field(it->second, key, value);
  }
  base.validate();
  return base;
}

GenConfig load_config(const std::string& path, GenConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

SSCInstance make_skeleton(const GenConfig& cfg) {
  SSCInstance inst;
  inst.seed = cfg.seed;
  inst.profile = to_string(cfg.profile);
  inst.periods = cfg.periods;
  inst.n_raw = cfg.raw_materials;
  inst.n_final = cfg.final_products;
  inst.n_categories = cfg.categories;
  inst.fuel_price = cfg.fuel_price;
  inst.discount_rate = cfg.discount_rate;

  const bool cross = cfg.overseas && (cfg.airports >= 2 || cfg.seaports >= 2);
  auto add = [&](EntityKind k, int count, const char* prefix, bool split) {
    for (int i = 0; i < count; ++i) {
      const int continent = (split && cross && count >= 2 && i == count - 1) ? 1 : 0;
      inst.entities.push_back({k, continent, prefix + std::to_string(i)});
    }
  };
  add(EntityKind::kSupplier, cfg.suppliers, "s", false);
  add(EntityKind::kFactory, cfg.factories, "f", false);
  add(EntityKind::kWarehouse, cfg.warehouses, "w", true);
  add(EntityKind::kCustomer, cfg.customers, "c", true);
  // Hubs split only when the pair can link the continents.
  add(EntityKind::kAirport, cfg.airports, "a", true);
  add(EntityKind::kSeaport, cfg.seaports, "p", true);
  if (cross && cfg.airports < 2) {
    for (auto& e : inst.entities) {
      if (e.kind == EntityKind::kAirport) e.continent = 0;
    }
  }
  if (cross && cfg.seaports < 2) {
    for (auto& e : inst.entities) {
      if (e.kind == EntityKind::kSeaport) e.continent = 0;
    }
  }

  for (int a = 0; a < cfg.trucks; ++a) {
    inst.modes.push_back({ModeKind::kTruck, "truck" + std::to_string(a), 0, cfg.ntrips, 0, 0});
  }
  if (cfg.airports >= 2) inst.modes.push_back({ModeKind::kPlane, "plane", 0, 0, 0, cfg.tariff_plane});
  if (cfg.seaports >= 2) inst.modes.push_back({ModeKind::kBoat, "boat", 0, 0, 0, cfg.tariff_boat});

  for (int g = 0; g < cfg.prod_techs; ++g) inst.techs.push_back({false, 0, 0, 0, 0, 0});
  for (int g = 0; g < cfg.rem_techs; ++g) inst.techs.push_back({true, 0, 0, 0, 0, 0});
  for (int n = 0; n < cfg.final_products; ++n) {
    for (int g = 0; g < cfg.prod_techs; ++g) inst.h_prod.push_back({n, g});
    for (int g = 0; g < cfg.rem_techs; ++g) inst.h_rem.push_back({n, cfg.prod_techs + g});
  }

  const std::size_t ne = inst.entities.size();
  const std::size_t nf = cfg.final_products, nr = cfg.raw_materials, nt = inst.techs.size();
  const std::size_t ni = nr + 2 * nf, nc = cfg.categories;
  inst.pw.assign(ni, 0.0);
  inst.apu.assign(ni, 0.0);
  inst.dmd.assign(nf, std::vector<std::vector<double>>(ne, std::vector<double>(cfg.periods, 0.0)));
  inst.bom_prod.assign(nr, std::vector<std::vector<double>>(nf, std::vector<double>(nt, 0.0)));
  for (auto* v : {&inst.bom_rem, &inst.ret_frac, &inst.psu, &inst.inv_cost, &inst.rpc}) v->assign(nf, 0.0);
  for (auto* v : {&inst.rmc, &inst.sc_max, &inst.sc_min}) v->assign(nr, std::vector<double>(ne, 0.0));
  for (auto* v : {&inst.ic_max, &inst.ic_min}) v->assign(nf, std::vector<double>(ne, 0.0));
  for (auto* v : {&inst.ea_max, &inst.ea_min, &inst.ec_max, &inst.lc, &inst.sqmc, &inst.gdp_index,
                  &inst.unemployment, &inst.workers, &inst.workers_per_m2}) {
    v->assign(ne, 0.0);
  }
  inst.dist.assign(ne, std::vector<double>(ne, 0.0));
  inst.ei_install.assign(nc, 0.0);
  inst.ei_tech.assign(nf, std::vector<std::vector<double>>(nt, std::vector<double>(nc, 0.0)));
  inst.ei_mode.assign(inst.modes.size(), std::vector<double>(nc, 0.0));
  return inst;
}

void sample_demand(const GenConfig& cfg, Rng& rng, SSCInstance& inst) {
  for (int n = 0; n < inst.n_final; ++n) {
    for (int c : inst.entities_of(EntityKind::kCustomer)) {
      double d = rng.uniform(cfg.lbdc, cfg.ubdc);
      for (int t = 0; t < inst.periods; ++t) {
        inst.dmd[n][c][t] = d;
        d *= 1.0 + cfg.vart;
      }
    }
  }
}

void sample_items(const GenConfig& cfg, Rng& rng, SSCInstance& inst) {
  for (int r = 0; r < inst.n_raw; ++r) {
    for (const TechUse& h : inst.h_prod) {
      inst.bom_prod[r][h.product][h.tech] = rng.uniform(cfg.lbbom_prod, cfg.ubbom_prod);
    }
  }
  for (int n = 0; n < inst.n_final; ++n) inst.bom_rem[n] = rng.uniform(cfg.lbbom_rem, cfg.ubbom_rem);
  for (int r = 0; r < inst.n_raw; ++r) {
    inst.pw[r] = rng.uniform(cfg.lbpw, cfg.ubpw);
    inst.apu[r] = rng.uniform(cfg.lbapu, cfg.ubapu);
  }
  const double n_prod_techs = static_cast<double>(cfg.prod_techs);
  for (int n = 0; n < inst.n_final; ++n) {
    double pw = 0.0, apu = 0.0;
    for (int r = 0; r < inst.n_raw; ++r) {
      for (const TechUse& h : inst.h_prod) {
        if (h.product != n) continue;
        pw += inst.bom_prod[r][n][h.tech] * inst.pw[r];
        apu += inst.bom_prod[r][n][h.tech] * inst.apu[r];
      }
    }
    inst.pw[inst.final_item(n)] = pw / n_prod_techs;
    inst.apu[inst.final_item(n)] = apu / n_prod_techs;
  }
  for (int n = 0; n < inst.n_final; ++n) {
    inst.pw[inst.recovered_item(n)] = inst.bom_rem[n] * inst.pw[inst.final_item(n)];
    inst.apu[inst.recovered_item(n)] = inst.bom_rem[n] * inst.apu[inst.final_item(n)];
    inst.ret_frac[n] = rng.uniform(0.0, cfg.ubret);
  }
}

namespace {

// Technology capacities; returns false when production cannot cover demand.
bool draw_technology_capacities(const GenConfig& cfg, Rng& rng, SSCInstance& inst) {
  const double nf = static_cast<double>(cfg.factories);
  for (Technology& g : inst.techs) {
    double best = 0.0;
    for (int n = 0; n < inst.n_final; ++n) {
      for (int t = 0; t < inst.periods; ++t) {
        const double d = inst.period_demand(n, t);
        best = std::max(best, rng.uniform(1.0, 2.0) * (std::ceil(d / nf - 1e-9) - 0.1 * d));
      }
    }
    g.pc_max = best;
    g.pc_min = cfg.lbpc_min * best;
  }
  double top = 0.0;
  for (const TechUse& h : inst.h_prod) top = std::max(top, inst.techs[h.tech].pc_max);
  for (int n = 0; n < inst.n_final; ++n) {
    for (int t = 0; t < inst.periods; ++t) {
      if (nf * top < inst.period_demand(n, t)) return false;
    }
  }
  return true;
}

}  // namespace

double stock_capacity(double icfrac_max, double demand, double draw) {
  return std::ceil(icfrac_max * demand + draw - 1e-9);
}

void sample_capacities(const GenConfig& cfg, Rng& rng, SSCInstance& inst) {
  const int T = inst.periods;
  for (int n = 0; n < inst.n_final; ++n) {
    for (int i = 0; i < inst.num_entities(); ++i) {
      if (!inst.entities[i].is_facility()) continue;
      double best = 0.0;
      for (int t = 0; t < T; ++t) {
        const double d = inst.period_demand(n, t);
        best = std::max(best, stock_capacity(cfg.icfrac_max, d, rng.uniform(0.0, d)));
      }
      inst.ic_max[n][i] = best;
      inst.ic_min[n][i] = cfg.icfrac_min * best;
    }
  }

  bool ok = false;
  for (int attempt = 0; attempt < 10 && !ok; ++attempt) ok = draw_technology_capacities(cfg, rng, inst);
  if (!ok) throw ConfigError("technology capacities cannot cover demand after 10 draws");

  for (int i = 0; i < inst.num_entities(); ++i) {
    const EntityKind k = inst.entities[i].kind;
    if (k == EntityKind::kFactory) {
      inst.ea_max[i] = rng.uniform(cfg.lbeaf_max, cfg.ubeaf_max);
      inst.ea_min[i] = rng.uniform(cfg.lbeaf_min, cfg.ubeaf_min);
    } else if (k == EntityKind::kWarehouse) {
      inst.ea_max[i] = rng.uniform(cfg.lbeaw_max, cfg.ubeaw_max);
      inst.ea_min[i] = rng.uniform(cfg.lbeaw_min, cfg.ubeaw_min);
    }
  }

  const std::vector<int> sup = inst.entities_of(EntityKind::kSupplier);
  for (int r = 0; r < inst.n_raw; ++r) {
    double need = 0.0;
    for (const TechUse& h : inst.h_prod) need += inst.techs[h.tech].pc_max * inst.bom_prod[r][h.product][h.tech];
    const double cap = 2.0 * std::ceil(need / static_cast<double>(sup.size()) - 1e-9);
    for (int s : sup) {
      inst.sc_max[r][s] = cap;
      inst.sc_min[r][s] = rng.uniform(cfg.lbsc * cap, cfg.ubsc * cap);
    }
  }

  const int ne = inst.num_entities();
  for (int i = 0; i < ne; ++i) {
    for (int j = i + 1; j < ne; ++j) {
      inst.dist[i][j] = inst.dist[j][i] = rng.uniform(cfg.lbdist, cfg.ubdist);
    }
  }

  // Per-period throughput cap: every unit that could pass through an entity
  // (demand, stock build-up, and the raw materials behind it).
  double units = 0.0;
  for (int n = 0; n < inst.n_final; ++n) {
    double stock = 0.0;
    for (int i = 0; i < ne; ++i) stock += inst.ic_max[n][i];
    double peak = 0.0;
    for (int t = 0; t < T; ++t) peak = std::max(peak, inst.period_demand(n, t));
    double bom = 0.0;
    for (int r = 0; r < inst.n_raw; ++r) {
      double top = 0.0;
      for (const TechUse& h : inst.h_prod) {
        if (h.product == n) top = std::max(top, inst.bom_prod[r][n][h.tech]);
      }
      bom += top;
    }
    units += (peak + stock) * (2.0 + bom);
  }
  for (int i = 0; i < ne; ++i) inst.ec_max[i] = std::ceil(units);

  // Vehicle capacities relative to the heaviest period.
  double weight = 0.0;
  for (int t = 0; t < T; ++t) {
    double w = 0.0;
    for (int n = 0; n < inst.n_final; ++n) w += inst.period_demand(n, t) * inst.pw[inst.final_item(n)];
    weight = std::max(weight, w);
  }
  weight = std::max(weight, 1.0);
  for (Mode& mode : inst.modes) {
    const double frac = mode.kind == ModeKind::kTruck   ? cfg.vcapfrac_truck
                        : mode.kind == ModeKind::kPlane ? cfg.vcapfrac_plane
                                                        : cfg.vcapfrac_boat;
    mode.vcap = std::ceil(frac * weight);
  }
}

void sample_costs(const GenConfig& cfg, Rng& rng, SSCInstance& inst) {
  for (Technology& g : inst.techs) {
    g.tec = rng.uniform(cfg.lbtec * g.pc_max, cfg.ubtec * g.pc_max);
    g.opc = rng.uniform(cfg.lbopc, cfg.ubopc);
    g.workers = cfg.fracwg * std::ceil(g.opc);
  }
  for (int n = 0; n < inst.n_final; ++n) {
    inst.psu[n] = rng.uniform(cfg.lbpsu, cfg.ubpsu);
    inst.inv_cost[n] = cfg.scfrac + inst.pw[inst.final_item(n)];
    inst.rpc[n] = inst.bom_rem[n] * inst.psu[n] * rng.uniform(cfg.lbrpc, cfg.ubrpc);
  }
  for (int r = 0; r < inst.n_raw; ++r) {
    for (int s : inst.entities_of(EntityKind::kSupplier)) inst.rmc[r][s] = rng.uniform(cfg.lbrmc, cfg.ubrmc);
  }
  for (Mode& mode : inst.modes) {
    if (mode.kind == ModeKind::kTruck) mode.avc = rng.uniform(FixedIntervals::kAvcLo, FixedIntervals::kAvcHi);
  }
}

void sample_social(const GenConfig& cfg, Rng& rng, SSCInstance& inst) {
  for (int i = 0; i < inst.num_entities(); ++i) {
    inst.lc[i] = rng.uniform(FixedIntervals::kLcLo, FixedIntervals::kLcHi);
    inst.gdp_index[i] = rng.uniform(FixedIntervals::kGdpLo, FixedIntervals::kGdpHi);
    inst.unemployment[i] = rng.uniform(FixedIntervals::kUnempLo, FixedIntervals::kUnempHi);
  }
  for (int i = 0; i < inst.num_entities(); ++i) {
    const EntityKind k = inst.entities[i].kind;
    if (k != EntityKind::kFactory && k != EntityKind::kWarehouse) continue;
    const bool fac = k == EntityKind::kFactory;
    // Construction cost scales with the largest installable area.
    const double base = inst.lc[i] * inst.ea_max[i];
    inst.sqmc[i] = rng.uniform(0.5 * base, cfg.ubsqmc + cfg.sqmcfac * base);
    inst.workers[i] = fac ? rng.uniform(cfg.lbwf, cfg.ubwf) : rng.uniform(cfg.lbww, cfg.ubww);
    inst.workers_per_m2[i] = fac ? rng.uniform(cfg.lbwpsqf, cfg.ubwpsqf) : rng.uniform(cfg.lbwpsqw, cfg.ubwpsqw);
  }
}

void sample_environment(const GenConfig& /*cfg*/, Rng& rng, SSCInstance& inst) {
  for (double& e : inst.ei_install) e = rng.uniform(FixedIntervals::kEiInstallLo, FixedIntervals::kEiInstallHi);
  for (auto& per_tech : inst.ei_tech) {
    for (auto& per_cat : per_tech) {
      for (double& e : per_cat) e = rng.uniform(FixedIntervals::kEiTechLo, FixedIntervals::kEiTechHi);
    }
  }
  for (auto& per_cat : inst.ei_mode) {
    for (double& e : per_cat) e = rng.uniform(FixedIntervals::kEiModeLo, FixedIntervals::kEiModeHi);
  }
}

SSCInstance apply_profile(SSCInstance inst, Profile profile) {
  inst.profile = to_string(profile);
  switch (profile) {
    case Profile::kStd:
      break;
    case Profile::kTechc: {
      double mean = 0.0;
      for (const Technology& g : inst.techs) mean += g.tec;
      mean /= static_cast<double>(std::max<std::size_t>(1, inst.techs.size()));
      for (Technology& g : inst.techs) g.tec = mean;
      break;
    }
    case Profile::kRawc: {
      const std::vector<int> sup = inst.entities_of(EntityKind::kSupplier);
      for (auto& row : inst.rmc) {
        double mean = 0.0;
        for (int s : sup) mean += row[s];
        mean /= static_cast<double>(sup.size());
        for (int s : sup) row[s] = mean;
      }
      break;
    }
    case Profile::kSup:
      for (auto& row : inst.sc_min) std::fill(row.begin(), row.end(), 0.0);
      break;
    case Profile::kCap:
      for (Technology& g : inst.techs) g.pc_min = 0.0;
      break;
  }
  return inst;
}

SSCInstance generate(const GenConfig& cfg) {
  cfg.validate();
  SSCInstance inst = make_skeleton(cfg);
  Rng demand = Rng::substream(cfg.seed, kDemand);
  sample_demand(cfg, demand, inst);
  Rng items = Rng::substream(cfg.seed, kItems);
  sample_items(cfg, items, inst);
  Rng caps = Rng::substream(cfg.seed, kCapacities);
  sample_capacities(cfg, caps, inst);
  Rng costs = Rng::substream(cfg.seed, kCosts);
  sample_costs(cfg, costs, inst);
  Rng social = Rng::substream(cfg.seed, kSocial);
  sample_social(cfg, social, inst);
  Rng env = Rng::substream(cfg.seed, kEnvironment);
  sample_environment(cfg, env, inst);
  inst = apply_profile(std::move(inst), cfg.profile);
  validate_instance(inst);
  return inst;
}

void validate_instance(const SSCInstance& inst) {
  try {
    ssc::check_dimensions(inst);
  } catch (const ssc::DimensionError& e) {
    throw ConfigError(e.what());
  }
  const int ne = inst.num_entities();
  for (const Technology& g : inst.techs) require(g.pc_min <= g.pc_max && g.pc_min >= 0.0, "pc_min exceeds pc_max");
  for (int i = 0; i < ne; ++i) {
    require(inst.ea_min[i] <= inst.ea_max[i], "ea_min exceeds ea_max");
    for (int j = 0; j < ne; ++j) {
      require(inst.dist[i][j] >= 0.0 && inst.dist[i][j] == inst.dist[j][i], "distances must be symmetric");
    }
    for (int n = 0; n < inst.n_final; ++n) require(inst.ic_min[n][i] <= inst.ic_max[n][i], "ic_min exceeds ic_max");
    for (int r = 0; r < inst.n_raw; ++r) require(inst.sc_min[r][i] <= inst.sc_max[r][i], "sc_min exceeds sc_max");
  }
  for (double f : inst.ret_frac) require(f >= 0.0 && f <= 1.0, "return fraction outside [0, 1]");
  for (const ssc::Mode& m : inst.modes) require(m.vcap > 0.0, "vehicle capacity must be positive");
  double top = 0.0;
  for (const TechUse& h : inst.h_prod) top = std::max(top, inst.techs[h.tech].pc_max);
  const double nf = inst.count(EntityKind::kFactory);
  for (int n = 0; n < inst.n_final; ++n) {
    for (int t = 0; t < inst.periods; ++t) {
      require(nf * top >= inst.period_demand(n, t), "production capacity below demand");
    }
  }
}

}  // namespace sscopt::instgen
