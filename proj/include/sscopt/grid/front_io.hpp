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

// Front files: a CSV of original-sense objective values and a JSON twin
// that also carries each point's assignment.

#ifndef SSCOPT_GRID_FRONT_IO_HPP_
#define SSCOPT_GRID_FRONT_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sscopt/grid/augmecon.hpp"

namespace sscopt::grid {

class FrontFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FrontRow {
  int id = 0;
  double f_eco_prime = 0.0;
  double f_env_prime = 0.0;
  double f_soc_prime = 0.0;
  double eps_env = 0.0;
  double eps_soc = 0.0;
  std::string method;
  double time_s = 0.0;

  // Minimization sense (eco and soc negated).
  ObjectiveVector minimized() const { return {-f_eco_prime, f_env_prime, -f_soc_prime}; }
};

inline constexpr const char* kFrontHeader =
    "id,f_eco_prime,f_env_prime,f_soc_prime,eps_env,eps_soc,method,time_s";

std::vector<FrontRow> front_rows(const std::vector<ParetoPoint>& points);
void write_front_csv(std::ostream& out, const std::vector<FrontRow>& rows);
std::vector<FrontRow> read_front_csv(std::istream& in);
std::vector<FrontRow> read_front_csv_file(const std::string& path);

// Rows of a document written by front_to_json.
std::vector<FrontRow> front_rows_from_json(const nlohmann::json& j);
// CSV when the path ends in .csv, the JSON document otherwise.
std::vector<FrontRow> read_front_file(const std::string& path);

nlohmann::json front_to_json(const BaseModel& base, const GridResult& result);

}  // namespace sscopt::grid

#endif  // SSCOPT_GRID_FRONT_IO_HPP_
