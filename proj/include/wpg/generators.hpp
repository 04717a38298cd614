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

#ifndef WPG_GENERATORS_HPP
#define WPG_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wpg/game.hpp"

namespace wpg {

// SplitMix64 (Steele, Lea, Flood): a tiny fixed-constant generator, so the
// same spec produces bit-identical games on every platform and toolchain.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : x_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (x_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Pre: bound > 0. Modulo reduction; the tiny bias does not matter here,
  // reproducibility does.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t x_;
};

struct GenSpec {
  std::uint32_t states = 1;
  std::int32_t priorities = 1;  // drawn uniformly from [0, priorities)
  double avg_degree = 1.0;      // >= 1; one mandatory successor per state
  double owner_ratio = 0.5;     // probability a state belongs to player 1
  std::uint64_t seed = 0;
};

/*
 * Seeded random game: every state gets one mandatory random successor (so
 * no state is a dead end), then floor((avg_degree - 1) * n) extra random
 * edges are thrown in; duplicates collapse, so the edge count lands in
 * [n, n + extras]. Draw order is fixed: owners, priorities, mandatory
 * successors, extra edges.
 */
inline GameGraph random_game(const GenSpec& spec) {
  if (spec.states < 1) throw std::invalid_argument("states must be >= 1");
  if (spec.priorities < 1) throw std::invalid_argument("priorities must be >= 1");
  if (spec.avg_degree < 1.0) throw std::invalid_argument("avg_degree must be >= 1");
  if (spec.owner_ratio < 0.0 || spec.owner_ratio > 1.0)
    throw std::invalid_argument("owner_ratio must be in [0, 1]");

  SplitMix64 rng(spec.seed);
  const std::uint32_t n = spec.states;

  std::vector<Player> owners(n);
  for (std::uint32_t s = 0; s < n; ++s)
    owners[s] = rng.unit() < spec.owner_ratio ? Player::p1 : Player::p2;

  std::vector<std::int32_t> priorities(n);
  for (std::uint32_t s = 0; s < n; ++s)
    priorities[s] = static_cast<std::int32_t>(rng.below(spec.priorities));

  std::vector<std::pair<StateId, StateId>> edges;
  const auto extras =
      static_cast<std::uint64_t>(std::floor((spec.avg_degree - 1.0) * n));
  edges.reserve(n + extras);
  for (std::uint32_t s = 0; s < n; ++s)
    edges.emplace_back(s, static_cast<StateId>(rng.below(n)));
  for (std::uint64_t e = 0; e < extras; ++e) {
    const auto u = static_cast<StateId>(rng.below(n));
    const auto v = static_cast<StateId>(rng.below(n));
    edges.emplace_back(u, v);
  }
  return GameGraph(std::move(owners), std::move(priorities), edges);
}

/*
 * Worst case for rescanning engines: state i has priority i (every
 * priority bucket is a singleton, so deciding the game takes n layers),
 * owners alternate, and the edges are a self loop on every state, a chain
 * edge i -> i+1, and a back edge i -> 0 from odd states. Each layer's
 * attractor is exactly one state, while the surviving graph stays large.
 */
inline GameGraph ladder_family(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Player> owners(n);
  std::vector<std::int32_t> priorities(n);
  std::vector<std::pair<StateId, StateId>> edges;
  edges.reserve(2 * static_cast<std::size_t>(n) + n / 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    owners[i] = i % 2 == 0 ? Player::p1 : Player::p2;
    priorities[i] = static_cast<std::int32_t>(i);
    edges.emplace_back(i, i);
    if (i + 1 < n) edges.emplace_back(i, i + 1);
    if (i % 2 == 1) edges.emplace_back(i, 0);
  }
  return GameGraph(std::move(owners), std::move(priorities), edges);
}

}  // namespace wpg

#endif  // WPG_GENERATORS_HPP
