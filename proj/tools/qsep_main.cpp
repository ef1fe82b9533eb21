// Copyright 2026 The qsep authors
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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsep/criteria.hpp"
#include "qsep/state_io.hpp"
#include "qsep/states.hpp"
#include "qsep/sweep.hpp"

namespace {

using namespace qsep;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) +
                                  ": expected comma-separated integers, got '" +
                                  text + "'");
    }
  }
  if (out.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty list");
  }
  return out;
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto v = parse_int_list(text, "--pair");
  if (v.size() != 2) {
    throw std::invalid_argument("--pair: expected exactly two indices");
  }
  return {v[0], v[1]};
}

// Detector configuration shared by `eval` and `sweep`.
struct DetectorFlags {
  std::string criterion;
  int cut = 1;
  std::string pair_text = "0,1";
  double alpha = 1.0;
  int ell = 1;
  std::string g = "identity";
};

void add_detector_flags(CLI::App* cmd, DetectorFlags& flags) {
  cmd->add_option("--criterion", flags.criterion, "Criterion to evaluate")
      ->required()
      ->check(CLI::IsMember({"ccnr", "zr", "ppt", "thm21", "hr", "thm31"}));
  cmd->add_option("--cut", flags.cut,
                  "Contiguous bipartition: subsystems on side A (default 1)");
  cmd->add_option("--pair", flags.pair_text,
                  "Subsystem pair a,b for hr/thm31 (default 0,1)");
  cmd->add_option("--alpha", flags.alpha, "Weight alpha for thm21/thm31");
  cmd->add_option("--ell", flags.ell, "Replication count ell for thm21/thm31");
  cmd->add_option("--g", flags.g,
                  "G family: identity, ones, or a JSON matrix file");
}

CriterionParams params_from_flags(const DetectorFlags& flags) {
  if (flags.g == "identity") {
    return CriterionParams::scaled_identity(flags.alpha, flags.ell);
  }
  if (flags.g == "ones") {
    return CriterionParams::scaled_ones(flags.alpha, flags.ell);
  }
  CriterionParams params =
      CriterionParams::explicit_g(load_square_matrix(flags.g), flags.alpha);
  if (flags.ell != 1 && flags.ell != params.ell) {
    std::ostringstream os;
    os << "--ell " << flags.ell << " does not match the " << params.ell << "x"
       << params.ell << " matrix in '" << flags.g << "'";
    throw std::invalid_argument(os.str());
  }
  return params;
}

Detector make_detector(const DetectorFlags& flags) {
  const std::string& c = flags.criterion;
  if (c == "ccnr") {
    return [cut = flags.cut](const DensityMatrix& rho) {
      return ccnr(rho, cut);
    };
  }
  if (c == "zr") {
    return [cut = flags.cut](const DensityMatrix& rho) {
      return zr(rho, cut);
    };
  }
  if (c == "ppt") {
    return [cut = flags.cut](const DensityMatrix& rho) {
      return ppt(rho, cut);
    };
  }
  if (c == "thm21") {
    return [params = params_from_flags(flags),
            cut = flags.cut](const DensityMatrix& rho) {
      return augmented(rho, params, cut);
    };
  }
  const auto pair = parse_pair(flags.pair_text);
  if (c == "hr") {
    return [pair](const DensityMatrix& rho) {
      return multipartite_eval(rho, pair, PairMapKind::realign_map());
    };
  }
  return [pair, params = params_from_flags(flags)](const DensityMatrix& rho) {
    return multipartite_eval(rho, pair, PairMapKind::augmented(params));
  };
}

int run_eval(const DetectorFlags& flags, const std::string& state_path,
             bool no_validate, const std::string& perm_text, bool all_pairs) {
  DensityMatrix rho = load_state(state_path, !no_validate);
  if (!perm_text.empty()) {
    rho = permute_systems(rho, parse_int_list(perm_text, "--perm"));
  }

  if (all_pairs) {
    if (flags.criterion != "hr" && flags.criterion != "thm31") {
      throw std::invalid_argument("--all-pairs applies to hr/thm31 only");
    }
    const PairMapKind kind =
        flags.criterion == "hr"
            ? PairMapKind::realign_map()
            : PairMapKind::augmented(params_from_flags(flags));
    nlohmann::json results = nlohmann::json::array();
    bool any_detected = false;
    double max_margin = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < rho.subsystems(); ++a) {
      for (int b = 0; b < rho.subsystems(); ++b) {
        if (a == b) continue;
        const CriterionResult res = multipartite_eval(rho, {a, b}, kind);
        any_detected = any_detected || res.detected;
        max_margin = std::max(max_margin, res.margin);
        results.push_back(to_json(res));
      }
    }
    nlohmann::json out{{"criterion", flags.criterion},
                       {"results", results},
                       {"max_margin", max_margin},
                       {"detected", any_detected}};
    std::cout << out.dump(2) << '\n';
    return any_detected ? 2 : 0;
  }

  const CriterionResult res = make_detector(flags)(rho);
  std::cout << to_json(res).dump(2) << '\n';
  return res.detected ? 2 : 0;
}

NoiseFamily family_by_name(const std::string& name, double epsilon) {
  if (name == "tiles") return tiles_family();
  if (name == "shifts") return shifts_family();
  if (name == "ghz") return ghz_family(epsilon);
  throw std::invalid_argument("unknown family '" + name + "'");
}

int run_sweep(const DetectorFlags& flags, const std::string& family_name,
              double epsilon, double bisect_tol, int grid_points,
              const std::string& format, const std::string& out_path) {
  const NoiseFamily family = family_by_name(family_name, epsilon);
  const ThresholdReport report =
      find_threshold(family, make_detector(flags), bisect_tol, grid_points);

  std::ostringstream body;
  if (format == "csv") {
    write_csv(report, body);
  } else {
    body << to_json(report).dump(2) << '\n';
  }
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << body.str();
    std::cerr << "wrote " << out_path << '\n';
  }
  return 0;
}

int run_reproduce(const std::string& which, const std::string& out_dir,
                  double bisect_tol) {
  const TableReport report = reproduce(which, bisect_tol);
  const std::string csv_path = out_dir + "/" + which + ".csv";
  const std::string json_path = out_dir + "/" + which + ".json";
  {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write '" + csv_path + "'");
    write_csv(report, out);
  }
  {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write '" + json_path + "'");
    out << to_json(report).dump(2) << '\n';
  }
  write_csv(report, std::cerr);
  std::cerr << "wrote " << csv_path << " and " << json_path << '\n';
  return 0;
}

int run_gen(const std::string& type, const std::string& dims_text, int terms,
            int rank, std::uint64_t seed, const std::string& out_path) {
  const std::vector<int> dims = parse_int_list(dims_text, "--dims");
  int dim = 1;
  for (int s : dims) dim *= s;

  DensityMatrix rho;
  if (type == "random-separable") {
    rho = random_separable(dims, terms, seed);
  } else {
    rho = random_density(dim, rank == 0 ? dim : rank, seed, dims);
  }
  save_state(rho, out_path);
  std::cerr << "wrote " << out_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qsep: realignment-based entanglement detection for bipartite and "
      "multipartite density matrices"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd =
      app.add_subcommand("eval", "Evaluate a criterion on a state file");
  DetectorFlags eval_flags;
  std::string state_path, perm_text;
  bool no_validate = false, all_pairs = false;
  eval_cmd->add_option("--state", state_path, "State file (JSON)")->required();
  add_detector_flags(eval_cmd, eval_flags);
  eval_cmd->add_flag("--no-validate", no_validate,
                     "Skip the density-matrix invariant checks on load");
  eval_cmd->add_option("--perm", perm_text,
                       "Reorder subsystems before evaluating");
  eval_cmd->add_flag("--all-pairs", all_pairs,
                     "hr/thm31: evaluate every ordered pair and report the "
                     "maximum margin");

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Find the white-noise detection threshold of a family");
  DetectorFlags sweep_flags;
  std::string family_name, format = "json", sweep_out;
  double epsilon = 0.0, bisect_tol = 1e-7;
  int grid_points = 201;
  sweep_cmd->add_option("--family", family_name, "tiles, shifts or ghz")
      ->required()
      ->check(CLI::IsMember({"tiles", "shifts", "ghz"}));
  sweep_cmd->add_option("--epsilon", epsilon,
                        "Perturbation for the ghz family");
  add_detector_flags(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--tol", bisect_tol, "Bisection tolerance");
  sweep_cmd->add_option("--grid", grid_points, "Grid points (default 201)");
  sweep_cmd->add_option("--format", format, "csv or json (default json)")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", sweep_out, "Write to a file instead of "
                        "standard output");

  // reproduce
  auto* rep_cmd = app.add_subcommand(
      "reproduce", "Recompute a bundled benchmark table with reference "
                   "values and deltas");
  std::string which, out_dir = ".";
  double rep_tol = 1e-7;
  rep_cmd->add_option("--which", which, "table1, table2 or example21")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "example21"}));
  rep_cmd->add_option("--out-dir", out_dir, "Output directory (default .)");
  rep_cmd->add_option("--tol", rep_tol, "Bisection tolerance");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a sample state file");
  std::string gen_type, gen_dims, gen_out;
  int terms = 10, rank = 0;
  std::uint64_t seed = 1;
  gen_cmd->add_option("--type", gen_type, "random-separable or random-density")
      ->required()
      ->check(CLI::IsMember({"random-separable", "random-density"}));
  gen_cmd->add_option("--dims", gen_dims, "Subsystem dimensions, e.g. 3,3")
      ->required();
  gen_cmd->add_option("--terms", terms,
                      "Product terms for random-separable (default 10)");
  gen_cmd->add_option("--rank", rank,
                      "Rank for random-density (default: full)");
  gen_cmd->add_option("--seed", seed, "RNG seed (default 1)");
  gen_cmd->add_option("--out", gen_out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval_cmd->parsed()) {
      return run_eval(eval_flags, state_path, no_validate, perm_text,
                      all_pairs);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(sweep_flags, family_name, epsilon, bisect_tol,
                       grid_points, format, sweep_out);
    }
    if (rep_cmd->parsed()) {
      return run_reproduce(which, out_dir, rep_tol);
    }
    return run_gen(gen_type, gen_dims, terms, rank, seed, gen_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
