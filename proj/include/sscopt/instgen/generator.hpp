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

#ifndef SSCOPT_INSTGEN_GENERATOR_HPP_
#define SSCOPT_INSTGEN_GENERATOR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sscopt/instgen/rng.hpp"
#include "sscopt/ssc/instance.hpp"

namespace sscopt::instgen {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Profile { kStd, kTechc, kRawc, kSup, kCap };
const char* to_string(Profile p);
Profile profile_from_string(const std::string& s);  // throws ConfigError

// Fixed sampling intervals for parameters the generator does not expose.
struct FixedIntervals {
  static constexpr double kAvcLo = 14.0, kAvcHi = 18.0;
  static constexpr double kLcLo = 3.5, kLcHi = 30.4;
  static constexpr double kGdpLo = 0.355, kGdpHi = 1.24;
  static constexpr double kUnempLo = 4.8, kUnempHi = 24.5;
  static constexpr double kEiInstallLo = 0.0, kEiInstallHi = 83200.0;
  static constexpr double kEiTechLo = 0.0000049, kEiTechHi = 457000.0;
  static constexpr double kEiModeLo = 0.0, kEiModeHi = 0.00314;
};

struct GenConfig {
  std::uint64_t seed = 1;
  Profile profile = Profile::kStd;

  int suppliers = 3, factories = 3, warehouses = 3, customers = 4, airports = 2, seaports = 2;
  int raw_materials = 2, final_products = 1;
  int prod_techs = 3, rem_techs = 3;
  int trucks = 2;
  int periods = 3;
  int categories = 3;
  // Last warehouse, customer, airport and seaport sit on a second continent
  // when a cross-continent hub pair exists.
  bool overseas = true;

  double lbdc = 100, ubdc = 500, vart = 0.1;
  double lbbom_prod = 1, ubbom_prod = 3, lbbom_rem = 1, ubbom_rem = 2;
  double lbpw = 1, ubpw = 5, lbapu = 0.01, ubapu = 0.05;
  double ubret = 0.15, fracwg = 0.5;
  double icfrac_max = 0.5, icfrac_min = 0.1, lbpc_min = 0.1;
  double lbeaf_max = 800, ubeaf_max = 1200, lbeaf_min = 100, ubeaf_min = 300;
  double lbeaw_max = 400, ubeaw_max = 800, lbeaw_min = 50, ubeaw_min = 150;
  double lbsc = 0.01, ubsc = 0.05;
  double lbdist = 50, ubdist = 2000;
  double lbtec = 1, ubtec = 3;
  double lbopc = 1, ubopc = 10;
  double lbpsu = 1000, ubpsu = 3000;
  double scfrac = 0.5;
  double lbrpc = 0.1, ubrpc = 0.3;
  double lbrmc = 5, ubrmc = 20;
  double ubsqmc = 1000, sqmcfac = 1.0;
  double lbwf = 20, ubwf = 50, lbww = 5, ubww = 20;
  double lbwpsqf = 0.05, ubwpsqf = 0.1, lbwpsqw = 0.01, ubwpsqw = 0.05;
  // Vehicle capacity as a multiple of the largest per-period demand weight.
  double vcapfrac_truck = 0.5, vcapfrac_plane = 1.0, vcapfrac_boat = 2.0;
  double ntrips = 30, fuel_price = 1.5, discount_rate = 0.035;
  double tariff_plane = 0.002, tariff_boat = 0.0005;

  // Throws ConfigError naming the first violated bound.
  void validate() const;
};

// Flat "key = value" text; '#' starts a comment. Unknown keys are errors.
GenConfig parse_config(const std::string& text, GenConfig base = {});
GenConfig load_config(const std::string& path, GenConfig base = {});

// Generator sections, in draw order. Each consumes its own sub-stream so a
// change to one section never perturbs the draws of another.
enum Section : std::uint64_t { kDemand = 0, kItems, kCapacities, kCosts, kSocial, kEnvironment };

// Sets, names, continents, modes and technologies; no random draws.
ssc::SSCInstance make_skeleton(const GenConfig& cfg);
void sample_demand(const GenConfig& cfg, Rng& rng, ssc::SSCInstance& inst);
void sample_items(const GenConfig& cfg, Rng& rng, ssc::SSCInstance& inst);
void sample_capacities(const GenConfig& cfg, Rng& rng, ssc::SSCInstance& inst);
void sample_costs(const GenConfig& cfg, Rng& rng, ssc::SSCInstance& inst);
void sample_social(const GenConfig& cfg, Rng& rng, ssc::SSCInstance& inst);
void sample_environment(const GenConfig& cfg, Rng& rng, ssc::SSCInstance& inst);

// Maximum stock of one period: ceil(icfrac_max * demand + draw), where draw
// is uniform on [0, demand].
double stock_capacity(double icfrac_max, double demand, double draw);

ssc::SSCInstance apply_profile(ssc::SSCInstance inst, Profile profile);

ssc::SSCInstance generate(const GenConfig& cfg);

// Checks the instance invariants (min <= max pairs, fractions in [0, 1],
// symmetric distances, capacity covering demand); throws ConfigError.
void validate_instance(const ssc::SSCInstance& inst);

}  // namespace sscopt::instgen

#endif  // SSCOPT_INSTGEN_GENERATOR_HPP_
