/*
 * Copyright 2026 The wpg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WPG_BENCH_HPP
#define WPG_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpg/counters.hpp"
#include "wpg/generators.hpp"
#include "wpg/reference.hpp"
#include "wpg/solver.hpp"

namespace wpg {

enum class BenchFamily { ladder, random_graph };

inline const char* family_name(BenchFamily f) {
  return f == BenchFamily::ladder ? "ladder" : "random";
}

inline BenchFamily family_from_name(std::string_view name) {
  if (name == "ladder") return BenchFamily::ladder;
  if (name == "random") return BenchFamily::random_graph;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

struct BenchRow {
  BenchFamily family;
  std::uint32_t n;
  std::uint64_t m;
  std::int32_t d;
  std::string algo;
  std::uint32_t repeat;
  std::uint64_t wall_ns;
  WorkCounters work;
};

/*
 * One row per (size, algo, repeat), ordered by (n, algo, repeat) with the
 * algorithms in lexicographic order. Timing wraps the engine call only;
 * building the instance is outside the clock. Random instances derive
 * their seed from base.seed + n, so a row is reproducible from its
 * coordinates alone.
 */
inline std::vector<BenchRow> bench_rows(BenchFamily family,
                                        std::span<const std::uint32_t> sizes,
                                        std::span<const std::string> algos,
                                        std::uint32_t repeats,
                                        const GenSpec& base = {}) {
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  for (std::size_t k = 1; k < sizes.size(); ++k)
    if (sizes[k] <= sizes[k - 1])
      throw std::invalid_argument("sizes must be strictly increasing");
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  std::vector<std::string> algo_order(algos.begin(), algos.end());
  std::sort(algo_order.begin(), algo_order.end());
  algo_order.erase(std::unique(algo_order.begin(), algo_order.end()),
                   algo_order.end());
  if (algo_order.empty()) throw std::invalid_argument("no algorithms given");
  for (const std::string& a : algo_order)
    if (a != "linear" && a != "naive")
      throw std::invalid_argument("unknown algorithm: " + a);

  std::vector<BenchRow> rows;
  rows.reserve(sizes.size() * algo_order.size() * repeats);
  for (std::uint32_t n : sizes) {
    GenSpec spec = base;
    spec.states = n;
    spec.seed = base.seed + n;
    const GameGraph g =
        family == BenchFamily::ladder ? ladder_family(n) : random_game(spec);
    for (const std::string& algo : algo_order) {
      for (std::uint32_t r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const Solution sol = algo == "linear" ? solve(g) : solve_naive(g);
        const auto t1 = std::chrono::steady_clock::now();
        rows.push_back(BenchRow{
            family, n, g.edge_count(), g.priority_count(), algo, r,
            static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                    .count()),
            sol.work});
      }
    }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "family,n,m,d,algo,repeat,wall_ns,edge_relaxations,counter_inits,"
      "target_scan_steps\n";
  for (const BenchRow& r : rows) {
    out += family_name(r.family);
    out += ',';
    out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
           std::to_string(r.d) + ',';
    out += r.algo;
    out += ',' + std::to_string(r.repeat) + ',' + std::to_string(r.wall_ns) +
           ',' + std::to_string(r.work.edge_relaxations) + ',' +
           std::to_string(r.work.counter_inits) + ',' +
           std::to_string(r.work.target_scan_steps) + '\n';
  }
  return out;
}

struct ScalingRow {
  BenchFamily family;
  std::uint32_t n;
  std::uint64_t m;
  std::int32_t d;
  std::string algo;
  std::uint64_t median_wall_ns;
  WorkCounters work;  // identical across repeats; enforced
};

struct ScalingReport {
  std::vector<BenchRow> raw;
  std::vector<ScalingRow> rows;
  // Per algorithm: ratio of consecutive medians / work totals, one entry
  // per size doubling.
  std::map<std::string, std::vector<double>> wall_growth;
  std::map<std::string, std::vector<double>> work_growth;
};

/*
 * Doubling study: sizes must each double the previous. Operation counts
 * must be identical across repeats (they are deterministic; a mismatch is
 * an engine defect and throws); wall times are summarized by the median.
 */
inline ScalingReport run_scaling(BenchFamily family,
                                 std::span<const std::uint32_t> sizes,
                                 std::span<const std::string> algos,
                                 std::uint32_t repeats,
                                 const GenSpec& base = {}) {
  for (std::size_t k = 1; k < sizes.size(); ++k)
    if (sizes[k] != 2 * sizes[k - 1])
      throw std::invalid_argument("each size must double the previous");

  ScalingReport report;
  report.raw = bench_rows(family, sizes, algos, repeats, base);

  for (std::size_t k = 0; k < report.raw.size(); k += repeats) {
    std::vector<std::uint64_t> walls;
    walls.reserve(repeats);
    const BenchRow& first = report.raw[k];
    for (std::uint32_t r = 0; r < repeats; ++r) {
      const BenchRow& row = report.raw[k + r];
      if (row.work.total() != first.work.total())
        throw std::logic_error("operation counts differ across repeats");
      walls.push_back(row.wall_ns);
    }
    std::sort(walls.begin(), walls.end());
    report.rows.push_back(ScalingRow{first.family, first.n, first.m, first.d,
                                     first.algo, walls[walls.size() / 2],
                                     first.work});
  }

  for (const ScalingRow& row : report.rows) {
    for (const ScalingRow& prev : report.rows) {
      if (prev.algo == row.algo && prev.n * 2 == row.n) {
        report.wall_growth[row.algo].push_back(
            static_cast<double>(row.median_wall_ns) /
            static_cast<double>(std::max<std::uint64_t>(prev.median_wall_ns, 1)));
        report.work_growth[row.algo].push_back(
            static_cast<double>(row.work.total()) /
            static_cast<double>(std::max<std::uint64_t>(prev.work.total(), 1)));
      }
    }
  }
  return report;
}

}  // namespace wpg

#endif  // WPG_BENCH_HPP
