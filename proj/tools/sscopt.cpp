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

// sscopt: generate instances, approximate fronts, validate and score them.
// Exit codes: 0 success, 1 usage or input error, 2 solver or validation
// failure.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sscopt/grid/augmecon.hpp"
#include "sscopt/grid/front_io.hpp"
#include "sscopt/heur/mathfix.hpp"
#include "sscopt/heur/mathlagr.hpp"
#include "sscopt/instgen/generator.hpp"
#include "sscopt/metrics/metrics.hpp"
#include "sscopt/milp/lp_format.hpp"

namespace fs = std::filesystem;
using namespace sscopt;
using nlohmann::json;

namespace {

// Bad input files or values; exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Solver gave up or a solution failed validation; exit code 2.
struct FailureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

ssc::SSCInstance load_instance(const std::string& path) {
  try {
    return ssc::instance_from_json(read_json(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

int objective_index(const std::string& name) {
  if (name == "eco") return grid::kEco;
  if (name == "env") return grid::kEnv;
  if (name == "soc") return grid::kSoc;
  throw InputError("unknown objective " + name + " (expected eco, env or soc)");
}

struct GenerateArgs {
  std::optional<std::uint64_t> seed;
  std::optional<int> periods;
  std::optional<std::string> profile;
  std::string config;
  std::string out;
};

instgen::GenConfig make_config(const std::string& config_path, std::optional<std::uint64_t> seed,
                               std::optional<int> periods, std::optional<std::string> profile) {
  instgen::GenConfig cfg = config_path.empty() ? instgen::GenConfig{} : instgen::load_config(config_path);
  if (seed) cfg.seed = *seed;
  if (periods) cfg.periods = *periods;
  if (profile) cfg.profile = instgen::profile_from_string(*profile);
  cfg.validate();
  return cfg;
}

int run_generate(const GenerateArgs& a) {
  const instgen::GenConfig cfg = make_config(a.config, a.seed, a.periods, a.profile);
  write_text(a.out, ssc::to_json(instgen::generate(cfg)).dump(2) + "\n");
  return 0;
}

struct SolveArgs {
  std::string method = "exact";
  int grid = 10;
  double eps = 1e-3;
  double time_limit = 60.0;
  double rel_gap = 1e-4;
  bool no_bypass = false;
  int k_max = 10;
  std::optional<double> st;
  std::string update_rule = "standard";
  std::string trace;
  std::string in;
  std::string out;
};

std::unique_ptr<grid::MonoSolver> make_solver(const std::string& method, double time_limit, double rel_gap,
                                              int k_max, std::optional<double> st, const std::string& rule,
                                              std::ostream* trace) {
  milp::MilpOptions mo;
  mo.time_limit_s = time_limit;
  mo.rel_gap = rel_gap;
  if (method == "exact") return std::make_unique<grid::ExactSolver>(mo);
  if (method == "lagr") {
    heur::LagrOptions lo;
    lo.k_max = k_max;
    lo.st = st;
    lo.rule = heur::update_rule_from_string(rule);
    lo.milp = mo;
    lo.time_limit_s = time_limit;
    lo.trace = trace;
    return std::make_unique<heur::MathLagr>(lo);
  }
  if (method == "fix") {
    heur::FixOptions fo;
    fo.milp = mo;
    return std::make_unique<heur::MathFix>(fo);
  }
  throw InputError("unknown method " + method + " (expected exact, lagr or fix)");
}

grid::GridResult solve_front(const grid::BaseModel& base, const grid::MonoSolver& solver, int dg, double eps,
                             bool bypass) {
  grid::GridOptions go;
  go.dg = dg;
  go.eps = eps;
  go.bypass = bypass;
  go.on_cell = [](const grid::CellLog& c) {
    std::clog << "cell (" << c.gr_env << "," << c.gr_soc << ") " << grid::to_string(c.status) << " "
              << std::fixed << std::setprecision(2) << c.time_s << "s jump " << c.jump << "\n"
              << std::defaultfloat;
  };
  try {
    return grid::run_augmecon(base, solver, go);
  } catch (const grid::PayoffError& e) {
    throw FailureError(e.what());
  }
}

// Writes FRONT.json and FRONT.csv whatever extension the path carries.
void write_front(const std::string& out, const grid::BaseModel& base, const grid::GridResult& r) {
  fs::path stem = out;
  if (stem.extension() == ".json" || stem.extension() == ".csv") stem.replace_extension();
  write_text(fs::path(stem).replace_extension(".json").string(), grid::front_to_json(base, r).dump(2) + "\n");
  std::ostringstream csv;
  grid::write_front_csv(csv, grid::front_rows(r.front));
  write_text(fs::path(stem).replace_extension(".csv").string(), csv.str());
}

int run_solve(const SolveArgs& a) {
  const grid::BaseModel base = grid::BaseModel::from_instance(load_instance(a.in));
  std::ofstream trace_file;
  if (!a.trace.empty()) {
    trace_file.open(a.trace);
    if (!trace_file) throw InputError("cannot write " + a.trace);
  }
  const auto solver = make_solver(a.method, a.time_limit, a.rel_gap, a.k_max, a.st, a.update_rule,
                                  a.trace.empty() ? nullptr : &trace_file);
  const grid::GridResult r = solve_front(base, *solver, a.grid, a.eps, !a.no_bypass);
  std::clog << solver->name() << ": " << r.front.size() << " points, " << r.mono_calls << " mono-problems, "
            << r.time_s << " s\n";
  if (a.out.empty()) {
    std::cout << grid::front_to_json(base, r).dump(2) << "\n";
  } else {
    write_front(a.out, base, r);
  }
  return r.front.empty() ? 2 : 0;
}

struct ValidateArgs {
  std::string in;
  std::string front;
  std::string solution;
};

std::vector<double> assignment_vector(const milp::Model& m, const json& assignment) {
  std::vector<double> x(m.num_vars(), 0.0);
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    const std::string& id = m.var(static_cast<int>(j)).id;
    if (!assignment.contains(id)) throw InputError("assignment lacks " + id);
    x[j] = assignment.at(id).get<double>();
  }
  return x;
}

int run_validate(const ValidateArgs& a) {
  const ssc::SSCInstance inst = load_instance(a.in);
  try {
    instgen::validate_instance(inst);
  } catch (const instgen::ConfigError& e) {
    std::cout << "instance: " << e.what() << "\n";
    return 2;
  }
  const ssc::TriObjectiveModel tm = ssc::build_model(inst);
  std::vector<std::pair<std::string, std::vector<double>>> points;
  if (!a.front.empty()) {
    const json doc = read_json(a.front);
    for (const json& p : doc.at("points")) {
      points.emplace_back("point " + std::to_string(p.at("id").get<int>()), assignment_vector(tm.model, p.at("assignment")));
    }
  }
  if (!a.solution.empty()) {
    points.emplace_back("solution", assignment_vector(tm.model, read_json(a.solution).at("assignment")));
  }
  bool ok = true;
  for (const auto& [name, x] : points) {
    const std::vector<ssc::Violation> v = ssc::validate_solution(tm.model, x);
    const ssc::ObjectiveValues f = ssc::evaluate_objectives(tm, x);
    std::cout << name << ": " << (v.empty() ? "feasible" : "INFEASIBLE") << " f_eco'=" << f.eco_prime()
              << " f_env'=" << f.env_prime() << " f_soc'=" << f.soc_prime() << "\n";
    for (const ssc::Violation& e : v) std::cout << "  " << e.label << " violated by " << e.amount << "\n";
    ok = ok && v.empty();
  }
  if (points.empty()) std::cout << "instance: valid\n";
  return ok ? 0 : 2;
}

struct MetricsArgs {
  std::string front;
  std::string ref;
  std::string ideal = "auto";
  int weights = 105;
  std::string out;
};

std::vector<metrics::Vec3> load_vectors(const std::string& path) {
  std::vector<metrics::Vec3> out;
  for (const grid::FrontRow& r : grid::read_front_file(path)) out.push_back(r.minimized());
  if (out.empty()) throw InputError(path + " holds no points");
  return out;
}

metrics::Vec3 load_ideal(const std::string& path) {
  const json j = read_json(path);
  try {
    return {j.at("eco").get<double>(), j.at("env").get<double>(), j.at("soc").get<double>()};
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

int run_metrics(const MetricsArgs& a) {
  const std::vector<metrics::Vec3> front = load_vectors(a.front);
  const std::vector<metrics::Vec3> ref = a.ref.empty() ? front : load_vectors(a.ref);
  const metrics::Vec3 ideal = a.ideal == "auto" ? metrics::ideal_point(front, ref) : load_ideal(a.ideal);
  write_text(a.out, metrics::evaluate(front, ref, ideal, a.weights).to_json().dump(2) + "\n");
  return 0;
}

struct ExportArgs {
  std::string in;
  std::string objective = "eco";
  std::string out;
};

int run_export(const ExportArgs& a) {
  const ssc::TriObjectiveModel tm = ssc::build_model(load_instance(a.in));
  write_text(a.out, milp::export_lp(tm.model, tm.objective(objective_index(a.objective))));
  return 0;
}

struct BenchArgs {
  std::vector<std::string> profiles{"STD", "TECHC", "RAWC", "SUP", "CAP"};
  std::vector<int> periods{3, 5, 10};
  std::vector<std::uint64_t> seeds{1};
  int grid = 4;
  double eps = 1e-3;
  double time_limit = 60.0;
  std::string config;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  std::ostringstream table;
  table << "profile,periods,seed,method,points,mono_calls,solver_calls,time_s,amid,asns,r2\n";
  bool failed = false;
  for (const std::string& profile : a.profiles) {
    for (int t : a.periods) {
      for (std::uint64_t seed : a.seeds) {
        const instgen::GenConfig cfg = make_config(a.config, seed, t, profile);
        const grid::BaseModel base = grid::BaseModel::from_instance(instgen::generate(cfg));
        std::clog << "instance " << profile << " T=" << t << " seed " << seed << "\n";
        struct Run {
          std::string method;
          std::optional<grid::GridResult> result;
        };
        std::vector<Run> runs;
        for (const char* method : {"lagr", "fix", "exact"}) {
          const auto solver = make_solver(method, a.time_limit, 1e-4, 10, std::nullopt, "standard", nullptr);
          Run run{method, std::nullopt};
          try {
            run.result = solve_front(base, *solver, a.grid, a.eps, true);
          } catch (const FailureError& e) {
            std::clog << method << ": " << e.what() << "\n";
            failed = true;
          }
          runs.push_back(std::move(run));
        }
        // Reference: the nondominated union of every method's front.
        std::vector<metrics::Vec3> all;
        for (const Run& r : runs) {
          if (!r.result) continue;
          for (const grid::ParetoPoint& p : r.result->front) all.push_back(grid::as_vector(p.f));
        }
        std::vector<metrics::Vec3> ref;
        for (std::size_t i : grid::nondominated(all)) ref.push_back(all[i]);
        for (const Run& r : runs) {
          table << profile << ',' << t << ',' << seed << ',' << r.method << ',';
          if (!r.result) {
            table << "0,,,,,,\n";
            continue;
          }
          std::vector<metrics::Vec3> front;
          for (const grid::ParetoPoint& p : r.result->front) front.push_back(grid::as_vector(p.f));
          table << front.size() << ',' << r.result->mono_calls << ',' << r.result->solver_calls << ','
                << r.result->time_s << ',';
          if (front.empty()) {
            table << ",,\n";
            continue;
          }
          const metrics::Report rep = metrics::evaluate(front, ref, metrics::ideal_point(ref));
          table << rep.amid << ',' << rep.asns << ',' << rep.r2 << '\n';
        }
      }
    }
  }
  write_text(a.out, table.str());
  return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tri-objective supply chain design: instances, Pareto fronts and their quality"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "Generate an instance as JSON");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--periods", gen.periods, "Planning horizon")->check(CLI::PositiveNumber);
  g->add_option("--profile", gen.profile, "STD, TECHC, RAWC, SUP or CAP");
  g->add_option("--config", gen.config, "key = value file with generator settings")->check(CLI::ExistingFile);
  g->add_option("--out", gen.out, "Output file (default stdout)");

  SolveArgs sol;
  CLI::App* s = app.add_subcommand("solve", "Approximate the Pareto front of an instance");
  s->add_option("--method", sol.method, "exact, lagr or fix")->check(CLI::IsMember({"exact", "lagr", "fix"}));
  s->add_option("--grid", sol.grid, "Grid cells per constrained objective")->check(CLI::PositiveNumber);
  s->add_option("--eps", sol.eps, "Weight of the slack reward");
  s->add_option("--time-limit", sol.time_limit, "Seconds per mono-problem")->check(CLI::PositiveNumber);
  s->add_option("--rel-gap", sol.rel_gap, "Relative optimality gap of MILP solves");
  s->add_flag("--no-bypass", sol.no_bypass, "Visit every social cell");
  s->add_option("--k-max", sol.k_max, "Lagrangian iterations")->check(CLI::PositiveNumber);
  s->add_option("--st", sol.st, "Lagrangian step scalar (default by objective)");
  s->add_option("--update-rule", sol.update_rule, "standard or uniform")
      ->check(CLI::IsMember({"standard", "uniform"}));
  s->add_option("--trace", sol.trace, "JSON-lines trace of Lagrangian iterations");
  s->add_option("--in", sol.in, "Instance JSON")->required()->check(CLI::ExistingFile);
  s->add_option("--out", sol.out, "Front path; FRONT.json and FRONT.csv are written (default JSON to stdout)");

  ValidateArgs val;
  CLI::App* v = app.add_subcommand("validate", "Check an instance and, optionally, solutions against it");
  v->add_option("--in", val.in, "Instance JSON")->required()->check(CLI::ExistingFile);
  v->add_option("--front", val.front, "Front JSON with assignments")->check(CLI::ExistingFile);
  v->add_option("--solution", val.solution, "MILP result JSON")->check(CLI::ExistingFile);

  MetricsArgs met;
  CLI::App* m = app.add_subcommand("metrics", "Score a front against a reference front");
  m->add_option("--front", met.front, "Front JSON or CSV")->required()->check(CLI::ExistingFile);
  m->add_option("--ref", met.ref, "Reference front (default: the front itself)")->check(CLI::ExistingFile);
  m->add_option("--ideal", met.ideal, "auto, or a JSON file {eco, env, soc} in minimization sense");
  m->add_option("--weights", met.weights, "Number of Tchebycheff weight vectors")->check(CLI::PositiveNumber);
  m->add_option("--out", met.out, "Report JSON (default stdout)");

  ExportArgs exp;
  CLI::App* e = app.add_subcommand("export-lp", "Write one single-objective model in LP format");
  e->add_option("--in", exp.in, "Instance JSON")->required()->check(CLI::ExistingFile);
  e->add_option("--objective", exp.objective, "eco, env or soc")->check(CLI::IsMember({"eco", "env", "soc"}));
  e->add_option("--out", exp.out, "Output file (default stdout)");

  BenchArgs bench;
  CLI::App* b = app.add_subcommand("bench", "Run all three methods over profiles, horizons and seeds");
  b->add_option("--profiles", bench.profiles, "Profiles")->delimiter(',');
  b->add_option("--periods", bench.periods, "Horizons")->delimiter(',');
  b->add_option("--seeds", bench.seeds, "Seeds")->delimiter(',');
  b->add_option("--grid", bench.grid, "Grid cells per constrained objective")->check(CLI::PositiveNumber);
  b->add_option("--eps", bench.eps, "Weight of the slack reward");
  b->add_option("--time-limit", bench.time_limit, "Seconds per mono-problem")->check(CLI::PositiveNumber);
  b->add_option("--config", bench.config, "Generator settings for the instance shape")->check(CLI::ExistingFile);
  b->add_option("--out", bench.out, "CSV table (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (g->parsed()) return run_generate(gen);
    if (s->parsed()) return run_solve(sol);
    if (v->parsed()) return run_validate(val);
    if (m->parsed()) return run_metrics(met);
    if (e->parsed()) return run_export(exp);
    if (b->parsed()) return run_bench(bench);
  } catch (const FailureError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    // Config, format and input problems.
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
