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

#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "wpg/bench.hpp"

using namespace wpg;

TEST_CASE("family names round trip") {
  REQUIRE(family_from_name("ladder") == BenchFamily::ladder);
  REQUIRE(family_from_name("random") == BenchFamily::random_graph);
  REQUIRE(std::string(family_name(BenchFamily::ladder)) == "ladder");
  REQUIRE(std::string(family_name(BenchFamily::random_graph)) == "random");
  REQUIRE_THROWS_AS(family_from_name("grid"), std::invalid_argument);
}

TEST_CASE("bench rows are ordered and match direct solves") {
  const std::vector<std::uint32_t> sizes{4, 8};
  const std::vector<std::string> algos{"naive", "linear"};
  const auto rows = bench_rows(BenchFamily::ladder, sizes, algos, 3);
  REQUIRE(rows.size() == 12);

  std::size_t k = 0;
  for (std::uint32_t n : sizes) {
    const GameGraph g = ladder_family(n);
    const WorkCounters lin = solve(g).work;
    const WorkCounters nai = solve_naive(g).work;
    for (const std::string algo : {"linear", "naive"}) {
      const WorkCounters& expect = algo == "linear" ? lin : nai;
      for (std::uint32_t r = 0; r < 3; ++r, ++k) {
        const BenchRow& row = rows[k];
        REQUIRE(row.family == BenchFamily::ladder);
        REQUIRE(row.n == n);
        REQUIRE(row.m == g.edge_count());
        REQUIRE(row.d == g.priority_count());
        REQUIRE(row.algo == algo);
        REQUIRE(row.repeat == r);
        REQUIRE(row.work.edge_relaxations == expect.edge_relaxations);
        REQUIRE(row.work.counter_inits == expect.counter_inits);
        REQUIRE(row.work.target_scan_steps == expect.target_scan_steps);
        REQUIRE(row.work.renaming_steps == expect.renaming_steps);
      }
    }
  }
}

TEST_CASE("bench csv starts with the fixed header") {
  const std::vector<std::uint32_t> sizes{4};
  const std::vector<std::string> algos{"linear"};
  const auto rows = bench_rows(BenchFamily::ladder, sizes, algos, 1);
  const std::string csv = bench_csv(rows);
  REQUIRE(csv.rfind(
              "family,n,m,d,algo,repeat,wall_ns,edge_relaxations,"
              "counter_inits,target_scan_steps\n",
              0) == 0);
  REQUIRE(csv.find("\nladder,4,9,4,linear,0,") != std::string::npos);
}

TEST_CASE("bench input validation") {
  const std::vector<std::uint32_t> ok{4, 8};
  const std::vector<std::string> lin{"linear"};
  REQUIRE_THROWS_AS(
      bench_rows(BenchFamily::ladder, std::vector<std::uint32_t>{}, lin, 1),
      std::invalid_argument);
  REQUIRE_THROWS_AS(bench_rows(BenchFamily::ladder, ok, lin, 0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(bench_rows(BenchFamily::ladder, ok,
                               std::vector<std::string>{"brute"}, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(bench_rows(BenchFamily::ladder,
                               std::vector<std::uint32_t>{4, 4}, lin, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(bench_rows(BenchFamily::ladder,
                               std::vector<std::uint32_t>{8, 4}, lin, 1),
                    std::invalid_argument);
}

TEST_CASE("random family rows are reproducible from the base seed") {
  GenSpec base;
  base.priorities = 6;
  base.avg_degree = 2.0;
  base.seed = 5;
  const std::vector<std::uint32_t> sizes{16, 32};
  const std::vector<std::string> lin{"linear"};
  const auto a = bench_rows(BenchFamily::random_graph, sizes, lin, 1, base);
  const auto b = bench_rows(BenchFamily::random_graph, sizes, lin, 1, base);
  REQUIRE(a.size() == 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].m == b[i].m);
    REQUIRE(a[i].d == b[i].d);
    REQUIRE(a[i].work.total() == b[i].work.total());
  }
  // Seed offset by n: the two sizes come from different streams.
  GenSpec probe = base;
  probe.states = 16;
  probe.seed = base.seed + 16;
  REQUIRE(a[0].m == random_game(probe).edge_count());
}

TEST_CASE("scaling study summarizes medians and growth per algorithm") {
  const std::vector<std::uint32_t> sizes{8, 16, 32};
  const std::vector<std::string> algos{"linear", "naive"};
  const ScalingReport rep = run_scaling(BenchFamily::ladder, sizes, algos, 5);
  REQUIRE(rep.raw.size() == 30);
  REQUIRE(rep.rows.size() == 6);
  for (const ScalingRow& row : rep.rows) {
    // The median must be one of the five observed walls.
    bool found = false;
    for (const BenchRow& r : rep.raw)
      if (r.n == row.n && r.algo == row.algo && r.wall_ns == row.median_wall_ns)
        found = true;
    REQUIRE(found);
  }
  REQUIRE(rep.work_growth.at("linear").size() == 2);
  REQUIRE(rep.work_growth.at("naive").size() == 2);
  REQUIRE(rep.wall_growth.at("linear").size() == 2);
  for (double ratio : rep.work_growth.at("linear")) {
    REQUIRE(ratio > 1.5);
    REQUIRE(ratio < 2.2);
  }
  for (double ratio : rep.work_growth.at("naive")) REQUIRE(ratio > 2.8);

  REQUIRE_THROWS_AS(run_scaling(BenchFamily::ladder,
                                std::vector<std::uint32_t>{8, 24}, algos, 1),
                    std::invalid_argument);
}
