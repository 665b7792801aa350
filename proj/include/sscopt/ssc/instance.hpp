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

#ifndef SSCOPT_SSC_INSTANCE_HPP_
#define SSCOPT_SSC_INSTANCE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace sscopt::ssc {

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EntityKind { kSupplier, kFactory, kWarehouse, kCustomer, kAirport, kSeaport };
enum class ModeKind { kTruck, kPlane, kBoat };

const char* to_string(EntityKind k);
const char* to_string(ModeKind k);

struct Entity {
  EntityKind kind;
  int continent = 0;
  std::string name;

  bool is_hub() const { return kind == EntityKind::kAirport || kind == EntityKind::kSeaport; }
  bool is_facility() const { return kind == EntityKind::kFactory || kind == EntityKind::kWarehouse; }
};

struct Mode {
  ModeKind kind;
  std::string name;
  double vcap = 0.0;    // kg per trip
  double ntrips = 0.0;  // trips per vehicle per period (trucks)
  double avc = 0.0;     // fuel use, litres per 100 km (trucks)
  double tariff = 0.0;  // currency per kg km (planes and boats)
};

struct Technology {
  bool remanufacturing = false;
  double pc_max = 0.0;
  double pc_min = 0.0;
  double tec = 0.0;  // installation cost
  double opc = 0.0;  // operating cost per unit
  double workers = 0.0;
};

// (final product, technology) pair a factory may run.
struct TechUse {
  int product = 0;
  int tech = 0;

  bool operator==(const TechUse&) const = default;
};

// All entity-indexed arrays have one slot per entity; slots that do not
// apply to an entity's kind hold zero.
struct SSCInstance {
  static constexpr int kSchemaVersion = 1;

  std::uint64_t seed = 0;
  std::string profile = "STD";
  int periods = 0;
  int n_raw = 0;
  int n_final = 0;  // one recovered product per final product
  int n_categories = 1;
  std::vector<Entity> entities;
  std::vector<Mode> modes;
  std::vector<Technology> techs;
  std::vector<TechUse> h_prod;
  std::vector<TechUse> h_rem;

  // Items are indexed raw, then final, then recovered.
  std::vector<double> pw;   // kg per unit
  std::vector<double> apu;  // m2 per unit

  std::vector<std::vector<std::vector<double>>> dmd;       // [final][entity][period]
  std::vector<std::vector<std::vector<double>>> bom_prod;  // [raw][final][tech]
  std::vector<double> bom_rem;                             // [final] recovered units per unit
  std::vector<double> ret_frac;                            // [final]
  std::vector<double> psu;                                 // [final] sale price
  std::vector<double> inv_cost;                            // [final] per unit and period
  std::vector<double> rpc;                                 // [final] per recovered unit collected
  std::vector<std::vector<double>> rmc;                    // [raw][entity]
  std::vector<std::vector<double>> sc_max;                 // [raw][entity]
  std::vector<std::vector<double>> sc_min;                 // [raw][entity]
  std::vector<std::vector<double>> ic_max;                 // [final][entity]
  std::vector<std::vector<double>> ic_min;                 // [final][entity]
  std::vector<double> ea_max;                              // [entity]
  std::vector<double> ea_min;                              // [entity]
  std::vector<double> ec_max;                              // [entity]
  std::vector<std::vector<double>> dist;                   // [entity][entity] km
  std::vector<double> lc;                                  // [entity] land cost
  std::vector<double> sqmc;                                // [entity] construction cost
  std::vector<double> gdp_index;                           // [entity]
  std::vector<double> unemployment;                        // [entity] percent
  std::vector<double> workers;                             // [entity] minimum staff
  std::vector<double> workers_per_m2;                      // [entity]
  std::vector<double> ei_install;                          // [category] per m2
  std::vector<std::vector<std::vector<double>>> ei_tech;   // [final][tech][category] per unit
  std::vector<std::vector<double>> ei_mode;                // [mode][category] per kg
  double fuel_price = 1.5;
  double discount_rate = 0.035;

  int n_items() const { return n_raw + 2 * n_final; }
  int raw_item(int m) const { return m; }
  int final_item(int n) const { return n_raw + n; }
  int recovered_item(int n) const { return n_raw + n_final + n; }
  int num_entities() const { return static_cast<int>(entities.size()); }
  std::vector<int> entities_of(EntityKind k) const;
  int count(EntityKind k) const { return static_cast<int>(entities_of(k).size()); }
  // Total demand of final product n in period t.
  double period_demand(int n, int t) const;
};

// Throws DimensionError when an array disagrees with the sets.
void check_dimensions(const SSCInstance& inst);

nlohmann::json to_json(const SSCInstance& inst);
SSCInstance instance_from_json(const nlohmann::json& j);

}  // namespace sscopt::ssc

#endif  // SSCOPT_SSC_INSTANCE_HPP_
