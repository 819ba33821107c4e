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

#ifndef ORDMAT_EXPERIMENT_HPP
#define ORDMAT_EXPERIMENT_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ordmat/errors.hpp"
#include "ordmat/generators.hpp"
#include "ordmat/greedy.hpp"
#include "ordmat/instance.hpp"
#include "ordmat/mioc.hpp"
#include "ordmat/oracle.hpp"

namespace ordmat {

enum class Family { graphic, partition };

struct ExperimentConfig {
  Family family = Family::graphic;
  int n = 7;
  int m = 10;  // graphic only
  int K = 3;
  int p = 1;
  int instances = 1;
  std::uint64_t seed = 1;
  std::vector<std::string> algorithms{"mioc"};
  unsigned threads = 1;
  std::uint64_t max_scalarizations = 1'000'000;
};

inline const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names{"mioc", "mioc-o", "mioc-cmin", "mioc-cmax", "greedy", "oracle"};
  return names;
}

inline std::string family_name(Family f) { return f == Family::graphic ? "graphic" : "partition"; }

inline Family parse_family(const std::string& s) {
  if (s == "graphic") return Family::graphic;
  if (s == "partition") return Family::partition;
  throw InputError("unknown family '" + s + "'");
}

/// Instance i of an experiment uses seed cfg.seed + i.
inline Instance generate_instance(const ExperimentConfig& cfg, std::uint64_t seed) {
  return cfg.family == Family::graphic ? gen_graphic(cfg.n, cfg.m, cfg.K, seed, cfg.p)
                                       : gen_partition(cfg.n, cfg.K, seed, cfg.p);
}

struct AlgoOutcome {
  std::size_t nd_count = 0;
  std::uint64_t iters = 0;
};

inline AlgoOutcome run_algorithm(const Instance& inst, const std::string& algo, const SolveOptions& opts) {
  const bool multi = inst.objectives() > 1;
  if (algo == "mioc") {
    const auto r = multi ? mioc_multi(inst, opts) : mioc(inst, opts);
    return {r.points.size(), r.scalarizations};
  }
  if (multi && algo != "oracle") {
    throw InputError("algorithm '" + algo + "' supports a single ordinal objective only");
  }
  if (algo == "mioc-o") {
    const auto r = mioc_improved(inst, opts);
    return {r.points.size(), r.scalarizations};
  }
  if (algo == "mioc-cmin") {
    const auto r = mioc_lexmin(inst, opts);
    return {r.points.size(), r.scalarizations};
  }
  if (algo == "mioc-cmax") {
    const auto r = mioc_lexmax(inst, opts);
    return {r.points.size(), r.scalarizations};
  }
  if (algo == "greedy") {
    greedy_ordinal_basis(inst);
    return {1, 0};
  }
  if (algo == "oracle") {
    const auto bases = enumerate_bases(inst.matroid);
    return {oracle_nd(inst, FilterMode::ordinal).size(), bases.size()};
  }
  throw InputError("unknown algorithm '" + algo + "'");
}

struct ReportRow {
  std::string family;
  int n = 0;
  int m = 0;
  int K = 0;
  int p = 0;
  std::string seed;  // numeric seed, or "mean"
  std::string algo;
  std::string nd_count;
  std::string iters;
  std::string millis;
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "family,n,m,K,p,seed,algo,nd_count,iters,millis\r\n";
  for (const auto& r : rows) {
    os << csv_field(r.family) << ',' << r.n << ',' << r.m << ',' << r.K << ',' << r.p << ','
       << csv_field(r.seed) << ',' << csv_field(r.algo) << ',' << csv_field(r.nd_count) << ','
       << csv_field(r.iters) << ',' << csv_field(r.millis) << "\r\n";
  }
  return os.str();
}

namespace detail {

inline std::string fixed3(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

struct Measured {
  std::uint64_t seed;
  std::string algo;
  std::optional<AlgoOutcome> outcome;
  std::string failure;  // "resource-cap" when a cap was hit
  double millis = 0;
};

}  // namespace detail

/// Runs every configured algorithm on cfg.instances generated instances.
/// Rows are ordered by (seed, algo), followed by one "mean" row per
/// algorithm averaging its successful runs. A run that hits a resource cap
/// yields nd_count = iters = "resource-cap".
inline std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.instances < 1) throw InputError("run_experiment: instances must be >= 1");
  if (cfg.p < 1) throw InputError("run_experiment: p must be >= 1");
  if (cfg.algorithms.empty()) throw InputError("run_experiment: no algorithms selected");
  for (const auto& a : cfg.algorithms) {
    if (std::ranges::find(known_algorithms(), a) == known_algorithms().end()) {
      throw InputError("unknown algorithm '" + a + "'");
    }
    if (cfg.p > 1 && a != "mioc" && a != "oracle") {
      throw InputError("algorithm '" + a + "' supports a single ordinal objective only");
    }
  }
  std::vector<std::string> algos = cfg.algorithms;
  std::ranges::sort(algos);
  algos.erase(std::unique(algos.begin(), algos.end()), algos.end());

  // Surface generator input errors before any work is scheduled.
  generate_instance(cfg, cfg.seed);

  const SolveOptions opts{cfg.max_scalarizations, 1};
  std::vector<std::vector<detail::Measured>> per_instance(cfg.instances);
  auto work = [&](int i) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
    const Instance inst = generate_instance(cfg, seed);
    for (const auto& algo : algos) {
      detail::Measured row{seed, algo, std::nullopt, "", 0};
      const auto start = std::chrono::steady_clock::now();
      try {
        row.outcome = run_algorithm(inst, algo, opts);
      } catch (const ResourceError&) {
        row.failure = "resource-cap";
      }
      row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      per_instance[i].push_back(std::move(row));
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, cfg.instances));
  if (threads == 1) {
    for (int i = 0; i < cfg.instances; ++i) work(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (int i = next++; i < cfg.instances; i = next++) work(i);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  const int m = cfg.family == Family::graphic ? cfg.m : cfg.n;
  auto base_row = [&] {
    ReportRow r;
    r.family = family_name(cfg.family);
    r.n = cfg.n;
    r.m = m;
    r.K = cfg.K;
    r.p = cfg.p;
    return r;
  };

  std::vector<ReportRow> rows;
  struct Sum {
    double nd = 0, iters = 0, millis = 0;
    int ok = 0;
  };
  std::vector<Sum> sums(algos.size());
  for (const auto& inst_rows : per_instance) {
    for (std::size_t a = 0; a < inst_rows.size(); ++a) {
      const auto& mrow = inst_rows[a];
      ReportRow r = base_row();
      r.seed = std::to_string(mrow.seed);
      r.algo = mrow.algo;
      r.millis = detail::fixed3(mrow.millis);
      if (mrow.outcome) {
        r.nd_count = std::to_string(mrow.outcome->nd_count);
        r.iters = std::to_string(mrow.outcome->iters);
        sums[a].nd += static_cast<double>(mrow.outcome->nd_count);
        sums[a].iters += static_cast<double>(mrow.outcome->iters);
        sums[a].millis += mrow.millis;
        ++sums[a].ok;
      } else {
        r.nd_count = r.iters = mrow.failure;
      }
      rows.push_back(std::move(r));
    }
  }
  for (std::size_t a = 0; a < algos.size(); ++a) {
    ReportRow r = base_row();
    r.seed = "mean";
    r.algo = algos[a];
    if (sums[a].ok == 0) {
      r.nd_count = r.iters = r.millis = "resource-cap";
    } else {
      const double k = sums[a].ok;
      r.nd_count = detail::fixed3(sums[a].nd / k);
      r.iters = detail::fixed3(sums[a].iters / k);
      r.millis = detail::fixed3(sums[a].millis / k);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace ordmat

#endif  // ORDMAT_EXPERIMENT_HPP
