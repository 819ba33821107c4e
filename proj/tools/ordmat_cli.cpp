// Copyright 2026 The Authors.
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

// Command-line driver: instance generation, single solves, benchmark
// tables (CSV) and solver-versus-oracle sweeps.
//
// Exit codes: 0 success, 2 input error, 3 resource cap, 4 verification
// mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordmat/ordmat.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

struct Options {
  std::string family = "graphic";
  int n = 7;
  int m = 10;
  int K = 3;
  int p = 1;
  std::uint64_t seed = 1;
  std::vector<std::string> algos;
  int instances = 1;
  std::string out;
  std::string instance;
  unsigned threads = 1;
  std::uint64_t max_scalarizations = 1'000'000;
};

void add_generator_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "graphic or partition")->check(CLI::IsMember({"graphic", "partition"}));
  cmd->add_option("--n", o.n, "nodes (graphic) or ground-set size (partition)");
  cmd->add_option("--m", o.m, "edges (graphic)");
  cmd->add_option("--K", o.K, "categories per ordinal objective");
  cmd->add_option("--p", o.p, "number of ordinal objectives");
  cmd->add_option("--seed", o.seed, "base seed; instance i uses seed + i");
}

void add_solver_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--threads", o.threads, "worker threads");
  cmd->add_option("--max-scalarizations", o.max_scalarizations, "hard cap on subproblems per solve");
}

ordmat::ExperimentConfig to_config(const Options& o) {
  ordmat::ExperimentConfig cfg;
  cfg.family = ordmat::parse_family(o.family);
  cfg.n = o.n;
  cfg.m = o.m;
  cfg.K = o.K;
  cfg.p = o.p;
  cfg.seed = o.seed;
  cfg.instances = o.instances;
  cfg.threads = o.threads;
  cfg.max_scalarizations = o.max_scalarizations;
  if (!o.algos.empty()) cfg.algorithms = o.algos;
  return cfg;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ordmat::InputError("cannot write " + o.out);
  f << text;
}

nlohmann::json point_json(const ordmat::OutcomePoint& p) {
  nlohmann::json ord = nlohmann::json::array();
  for (const auto& v : p.ord) ord.push_back(v.cats);
  std::vector<ordmat::Element> witness(p.witness.begin(), p.witness.end());
  return {{"w", p.w}, {"ordinal", ord}, {"basis", witness}};
}

int run_generate(const Options& o) {
  const auto cfg = to_config(o);
  emit(o, ordmat::dump_instance(ordmat::generate_instance(cfg, cfg.seed)));
  return kExitOk;
}

int run_solve(const Options& o) {
  const auto inst = o.instance.empty() ? ordmat::generate_instance(to_config(o), o.seed)
                                       : ordmat::load_instance(o.instance);
  const std::string algo = o.algos.empty() ? "mioc" : o.algos.front();
  const ordmat::SolveOptions opts{o.max_scalarizations, o.threads};

  std::vector<ordmat::OutcomePoint> points;
  std::uint64_t iters = 0;
  if (algo == "greedy") {
    points.push_back(ordmat::greedy_ordinal_basis(inst));
  } else if (algo == "oracle") {
    points = ordmat::oracle_nd(inst, ordmat::FilterMode::ordinal);
    iters = ordmat::enumerate_bases(inst.matroid).size();
  } else {
    ordmat::SolveResult res;
    if (algo == "mioc") {
      res = inst.objectives() > 1 ? ordmat::mioc_multi(inst, opts) : ordmat::mioc(inst, opts);
    } else if (algo == "mioc-o") {
      res = ordmat::mioc_improved(inst, opts);
    } else if (algo == "mioc-cmin") {
      res = ordmat::mioc_lexmin(inst, opts);
    } else if (algo == "mioc-cmax") {
      res = ordmat::mioc_lexmax(inst, opts);
    } else {
      throw ordmat::InputError("unknown algorithm '" + algo + "'");
    }
    points = std::move(res.points);
    iters = res.scalarizations;
  }

  nlohmann::json out{{"algo", algo}, {"nd_count", points.size()}, {"iters", iters}};
  out["points"] = nlohmann::json::array();
  for (const auto& p : points) out["points"].push_back(point_json(p));
  emit(o, out.dump(2) + "\n");
  return kExitOk;
}

int run_bench(const Options& o) {
  emit(o, ordmat::to_csv(ordmat::run_experiment(to_config(o))));
  return kExitOk;
}

// Every solver against the brute-force oracle on generated instances.
int run_verify(const Options& o) {
  const auto cfg = to_config(o);
  const ordmat::SolveOptions opts{o.max_scalarizations, o.threads};
  using ordmat::FilterMode;
  int mismatches = 0;
  std::ostringstream log;
  auto same = [](const std::vector<ordmat::OutcomePoint>& a, const std::vector<ordmat::OutcomePoint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].same_outcome(b[i])) return false;
    }
    return true;
  };
  for (int i = 0; i < cfg.instances; ++i) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
    const auto inst = ordmat::generate_instance(cfg, seed);
    const auto expect = ordmat::oracle_nd(inst, FilterMode::ordinal);
    std::vector<std::pair<std::string, bool>> checks;
    if (inst.objectives() > 1) {
      checks.emplace_back("mioc", same(ordmat::mioc_multi(inst, opts).points, expect));
    } else {
      checks.emplace_back("mioc", same(ordmat::mioc(inst, opts).points, expect));
      checks.emplace_back("mioc-o", same(ordmat::mioc_improved(inst, opts).points, expect));
      checks.emplace_back("mioc-cmin", same(ordmat::mioc_lexmin(inst, opts).points,
                                            ordmat::oracle_nd(inst, FilterMode::lexmin)));
      checks.emplace_back("mioc-cmax", same(ordmat::mioc_lexmax(inst, opts).points,
                                            ordmat::oracle_nd(inst, FilterMode::lexmax)));
    }
    for (const auto& [name, ok] : checks) {
      if (!ok) {
        ++mismatches;
        log << "mismatch: seed " << seed << " algo " << name << "\n";
      }
    }
  }
  std::cout << log.str() << "verified " << cfg.instances << " instances, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid optimization with a sum objective and ordinal objectives"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "write a random instance as JSON");
  add_generator_flags(gen, o);
  gen->add_option("--out", o.out, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "solve one instance and print its non-dominated set");
  add_generator_flags(solve, o);
  add_solver_flags(solve, o);
  solve->add_option("--instance", o.instance, "instance JSON file (otherwise generated)");
  solve->add_option("--algo", o.algos, "mioc, mioc-o, mioc-cmin, mioc-cmax, greedy or oracle")->expected(1);
  solve->add_option("--out", o.out, "output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "run an experiment row and write CSV");
  add_generator_flags(bench, o);
  add_solver_flags(bench, o);
  bench->add_option("--algo", o.algos, "algorithms (repeat or comma-separate)")->delimiter(',');
  bench->add_option("--instances", o.instances, "instances per row");
  bench->add_option("--out", o.out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "compare solvers with the brute-force oracle");
  add_generator_flags(verify, o);
  add_solver_flags(verify, o);
  verify->add_option("--instances", o.instances, "instances to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen) return run_generate(o);
    if (*solve) return run_solve(o);
    if (*bench) return run_bench(o);
    return run_verify(o);
  } catch (const ordmat::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const ordmat::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ordmat::InstanceError& e) {
    std::cerr << "instance error: " << e.what() << "\n";
    return kExitInput;
  }
}
