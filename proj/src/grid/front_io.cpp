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

#include "sscopt/grid/front_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace sscopt::grid {

std::vector<FrontRow> front_rows(const std::vector<ParetoPoint>& points) {
  std::vector<FrontRow> rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ParetoPoint& p = points[i];
    rows.push_back({static_cast<int>(i), p.f.eco_prime(), p.f.env_prime(), p.f.soc_prime(), p.eps_env,
                    p.eps_soc, p.method, p.time_s});
  }
  return rows;
}

void write_front_csv(std::ostream& out, const std::vector<FrontRow>& rows) {
  out << kFrontHeader << '\n' << std::setprecision(17);
  for (const FrontRow& r : rows) {
    out << r.id << ',' << r.f_eco_prime << ',' << r.f_env_prime << ',' << r.f_soc_prime << ','
        << r.eps_env << ',' << r.eps_soc << ',' << r.method << ',' << r.time_s << '\n';
  }
}

namespace {

double parse_double(const std::string& s, int line) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw FrontFormatError("line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<FrontRow> read_front_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FrontFormatError("empty front file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kFrontHeader) throw FrontFormatError("unexpected header: " + line);
  std::vector<FrontRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 8) {
      throw FrontFormatError("line " + std::to_string(lineno) + ": expected 8 fields");
    }
    FrontRow r;
    r.id = static_cast<int>(parse_double(cells[0], lineno));
    r.f_eco_prime = parse_double(cells[1], lineno);
    r.f_env_prime = parse_double(cells[2], lineno);
    r.f_soc_prime = parse_double(cells[3], lineno);
    r.eps_env = parse_double(cells[4], lineno);
    r.eps_soc = parse_double(cells[5], lineno);
    r.method = cells[6];
    r.time_s = parse_double(cells[7], lineno);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<FrontRow> read_front_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrontFormatError("cannot open " + path);
  return read_front_csv(in);
}

std::vector<FrontRow> front_rows_from_json(const nlohmann::json& j) {
  std::vector<FrontRow> rows;
  try {
    for (const nlohmann::json& p : j.at("points")) {
      rows.push_back({p.at("id").get<int>(), p.at("f_eco_prime").get<double>(), p.at("f_env_prime").get<double>(),
                      p.at("f_soc_prime").get<double>(), p.at("eps_env").get<double>(),
                      p.at("eps_soc").get<double>(), p.at("method").get<std::string>(),
                      p.at("time_s").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw FrontFormatError(std::string("front document: ") + e.what());
  }
  return rows;
}

std::vector<FrontRow> read_front_file(const std::string& path) {
  if (path.ends_with(".csv")) return read_front_csv_file(path);
  std::ifstream in(path);
  if (!in) throw FrontFormatError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FrontFormatError(path + ": " + e.what());
  }
  return front_rows_from_json(j);
}

nlohmann::json front_to_json(const BaseModel& base, const GridResult& result) {
  using nlohmann::json;
  const milp::Model& m = base.tri->model;
  json bounds = json::object();
  const char* names[3] = {"eco", "env", "soc"};
  for (int k = 0; k < 3; ++k) {
    bounds[names[k]] = {{"lower", result.payoff.bounds.lower[k]}, {"upper", result.payoff.bounds.upper[k]}};
  }
  json points = json::array();
  const std::vector<FrontRow> rows = front_rows(result.front);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ParetoPoint& p = result.front[i];
    json assignment = json::object();
    for (std::size_t j = 0; j < p.x.size(); ++j) assignment[m.var(static_cast<int>(j)).id] = p.x[j];
    points.push_back({{"id", rows[i].id},
                      {"f_eco_prime", rows[i].f_eco_prime},
                      {"f_env_prime", rows[i].f_env_prime},
                      {"f_soc_prime", rows[i].f_soc_prime},
                      {"eps_env", p.eps_env},
                      {"eps_soc", p.eps_soc},
                      {"cell", {p.gr_env, p.gr_soc}},
                      {"method", p.method},
                      {"time_s", p.time_s},
                      {"assignment", std::move(assignment)}});
  }
  return {{"bounds", std::move(bounds)},
          {"mono_calls", result.mono_calls},
          {"solver_calls", result.solver_calls},
          {"time_s", result.time_s},
          {"points", std::move(points)}};
}

}  // namespace sscopt::grid
