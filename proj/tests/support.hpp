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

#ifndef WPG_TESTS_SUPPORT_HPP
#define WPG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wpg/attractor.hpp"
#include "wpg/game.hpp"
#include "wpg/generators.hpp"

namespace wpg::test {

// Terse constructor: owners as 0/1 ints, edges as pairs.
inline GameGraph game(std::vector<int> owners, std::vector<std::int32_t> priorities,
                      std::vector<std::pair<StateId, StateId>> edges) {
  std::vector<Player> o(owners.size());
  for (std::size_t s = 0; s < owners.size(); ++s)
    o[s] = owners[s] == 0 ? Player::p1 : Player::p2;
  return GameGraph(std::move(o), std::move(priorities), edges);
}

struct OracleAttractor {
  std::vector<std::uint8_t> member;     // indexed by state
  std::vector<std::uint32_t> rank;      // valid where member
  std::vector<StateId> members_sorted;  // ascending
};

/*
 * Round-based attractor fixpoint, written to share nothing with the
 * engine: each round scans every live state and adds those that can now
 * be forced, until a round adds nothing. The round in which a state
 * enters is its forcing distance.
 */
inline OracleAttractor oracle_attract(const GameGraph& g, const AliveMask& alive,
                                      std::vector<StateId> targets, Player player) {
  const StateId n = g.state_count();
  OracleAttractor out;
  out.member.assign(n, 0);
  out.rank.assign(n, 0);
  for (StateId t : targets) out.member[t] = 1;

  for (std::uint32_t round = 1;; ++round) {
    std::vector<StateId> added;
    for (StateId s = 0; s < n; ++s) {
      if (!alive.alive(s) || out.member[s]) continue;
      bool can_force;
      if (g.owner(s) == player) {
        can_force = false;
        for (StateId t : g.successors(s))
          if (alive.alive(t) && out.member[t]) {
            can_force = true;
            break;
          }
      } else {
        can_force = true;
        for (StateId t : g.successors(s))
          if (alive.alive(t) && !out.member[t]) {
            can_force = false;
            break;
          }
      }
      if (can_force) added.push_back(s);
    }
    if (added.empty()) break;
    for (StateId s : added) {
      out.member[s] = 1;
      out.rank[s] = round;
    }
  }

  for (StateId s = 0; s < n; ++s)
    if (out.member[s]) out.members_sorted.push_back(s);
  return out;
}

// The engine's rank should be the forcing distance: equal to the oracle's
// round number for every member, with the same member set.
inline bool matches_oracle(const GameGraph& g, const AttractorResult& got,
                           const OracleAttractor& want) {
  std::vector<StateId> got_sorted = got.members;
  std::sort(got_sorted.begin(), got_sorted.end());
  if (got_sorted != want.members_sorted) return false;
  for (std::size_t k = 0; k < got.members.size(); ++k)
    if (got.ranks[k] != want.rank[got.members[k]]) return false;
  (void)g;
  return true;
}

/*
 * Structural soundness of an attractor strategy:
 *  - targets are exactly the rank-0 members;
 *  - a member owned by the attracting player with positive rank moves along
 *    a live edge to a member of rank exactly one less;
 *  - a member owned by the opponent with positive rank has every live
 *    successor inside the result with strictly smaller rank.
 * Together these force every play from a member into the targets.
 */
inline bool strategy_is_forcing(const GameGraph& g, const AliveMask& alive,
                                const AttractorResult& res, Player player) {
  std::vector<std::uint32_t> rank_of(g.state_count(), no_state);
  for (std::size_t k = 0; k < res.members.size(); ++k)
    rank_of[res.members[k]] = res.ranks[k];

  for (std::size_t k = 0; k < res.members.size(); ++k) {
    const StateId s = res.members[k];
    const std::uint32_t r = res.ranks[k];
    const StateId via = res.strategy[k];
    if (r == 0) {
      if (via != no_state) return false;
      continue;
    }
    if (g.owner(s) == player) {
      if (via == no_state || !g.has_edge(s, via)) return false;
      if (!alive.alive(via)) return false;
      if (rank_of[via] != r - 1) return false;
    } else {
      if (via != no_state) return false;
      for (StateId t : g.successors(s)) {
        if (!alive.alive(t)) continue;
        if (rank_of[t] == no_state || rank_of[t] >= r) return false;
      }
    }
  }
  return true;
}

// The live complement of an attractor must be a trap for the attracting
// player: no player-owned escape into the set, and the opponent keeps a
// move outside it.
inline bool complement_is_trap(const GameGraph& g, const AliveMask& alive,
                               const AttractorResult& res, Player player) {
  std::vector<std::uint8_t> in(g.state_count(), 0);
  for (StateId s : res.members) in[s] = 1;
  for (StateId s = 0; s < g.state_count(); ++s) {
    if (!alive.alive(s) || in[s]) continue;
    if (g.owner(s) == player) {
      for (StateId t : g.successors(s))
        if (alive.alive(t) && in[t]) return false;
    } else {
      bool escape = false;
      for (StateId t : g.successors(s))
        if (alive.alive(t) && !in[t]) {
          escape = true;
          break;
        }
      if (!escape) return false;
    }
  }
  return true;
}

// Random small game specs for property sweeps; k indexes the draw.
inline GenSpec sweep_spec(std::uint64_t seed, std::uint64_t k, std::uint32_t max_states,
                          std::int32_t max_priorities) {
  SplitMix64 rng(seed + k);
  GenSpec spec;
  spec.states = 1 + static_cast<std::uint32_t>(rng.below(max_states));
  spec.priorities = 1 + static_cast<std::int32_t>(
                            rng.below(static_cast<std::uint64_t>(max_priorities)));
  spec.avg_degree = 1.0 + rng.unit() * 3.0;
  spec.owner_ratio = rng.unit();
  spec.seed = rng.next();
  return spec;
}

}  // namespace wpg::test

#endif  // WPG_TESTS_SUPPORT_HPP
