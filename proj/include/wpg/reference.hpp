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

#ifndef WPG_REFERENCE_HPP
#define WPG_REFERENCE_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wpg/attractor.hpp"
#include "wpg/game.hpp"
#include "wpg/solver.hpp"

namespace wpg {

/*
 * The unique play under two memoryless strategies is a lasso: a simple
 * prefix into a cycle. `states` lists every state visited, each once;
 * `cycle_start` indexes where the cycle begins. The winner is decided by
 * the parity of the minimum priority among all visited states.
 */
struct PlayOutcome {
  Player winner = Player::p1;
  std::int32_t min_priority = 0;
  std::vector<StateId> states;
  std::uint32_t cycle_start = 0;
};

// Pre: sigma covers every player-1 state, pi every player-2 state, and all
// choices are edges of g.
inline PlayOutcome eval_play(const GameGraph& g, const MemorylessStrategy& sigma,
                             const MemorylessStrategy& pi, StateId start) {
  if (start >= g.state_count()) throw std::invalid_argument("start out of range");
  std::vector<std::uint32_t> pos(g.state_count(), no_state);
  PlayOutcome out;
  out.min_priority = std::numeric_limits<std::int32_t>::max();
  StateId s = start;
  while (pos[s] == no_state) {
    pos[s] = static_cast<std::uint32_t>(out.states.size());
    out.states.push_back(s);
    out.min_priority = std::min(out.min_priority, g.priority(s));
    const MemorylessStrategy& turn = g.owner(s) == Player::p1 ? sigma : pi;
    const StateId t = turn.choice[s];
    if (t == no_state || !g.has_edge(s, t))
      throw GameError(Errc::malformed_strategy,
                      "no valid choice at state " + std::to_string(s), s);
    s = t;
  }
  out.cycle_start = pos[s];
  out.winner = player_for_priority(out.min_priority);
  return out;
}

namespace detail {

// Minimum priority on the unique play of the joint move table `next`.
inline std::int32_t play_min_priority(const GameGraph& g,
                                      const std::vector<StateId>& next, StateId start,
                                      std::vector<std::uint64_t>& seen,
                                      std::uint64_t stamp) {
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  for (StateId s = start; seen[s] != stamp; s = next[s]) {
    seen[s] = stamp;
    best = std::min(best, g.priority(s));
  }
  return best;
}

}  // namespace detail

/*
 * States from which `player` has a memoryless strategy winning against
 * every memoryless opponent strategy, established by exhaustive
 * enumeration of both strategy spaces. The number of strategy pairs is
 * the product of all out-degrees; enumeration refuses to start when it
 * exceeds `limit`.
 */
inline std::vector<StateId> bruteforce_region(const GameGraph& g, Player player,
                                              std::uint64_t limit = 10'000'000) {
  const StateId n = g.state_count();
  unsigned __int128 pairs = 1;
  for (StateId s = 0; s < n; ++s) {
    pairs *= g.out_degree(s);
    if (pairs > limit)
      throw GameError(Errc::too_large,
                      "strategy pair count exceeds limit of " + std::to_string(limit),
                      limit);
  }

  std::vector<StateId> own, opp;
  for (StateId s = 0; s < n; ++s)
    (g.owner(s) == player ? own : opp).push_back(s);

  std::vector<std::uint32_t> own_idx(own.size(), 0), opp_idx(opp.size(), 0);
  std::vector<StateId> next(n);
  for (StateId s = 0; s < n; ++s) next[s] = g.successors(s)[0];

  const auto advance = [&g, &next](const std::vector<StateId>& group,
                                   std::vector<std::uint32_t>& idx) -> bool {
    for (std::size_t k = 0; k < group.size(); ++k) {
      const StateId s = group[k];
      const auto succ = g.successors(s);
      if (++idx[k] < succ.size()) {
        next[s] = succ[idx[k]];
        return true;
      }
      idx[k] = 0;
      next[s] = succ[0];
    }
    return false;
  };
  const auto rewind = [&g, &next](const std::vector<StateId>& group,
                                  std::vector<std::uint32_t>& idx) {
    for (std::size_t k = 0; k < group.size(); ++k) {
      idx[k] = 0;
      next[group[k]] = g.successors(group[k])[0];
    }
  };

  const bool want_even = player == Player::p1;
  std::vector<std::uint8_t> proven(n, 0), cand(n, 0);
  std::vector<std::uint64_t> seen(n, 0);
  std::uint64_t stamp = 0;
  StateId remaining = n;

  do {
    std::uint32_t ncand = 0;
    for (StateId s = 0; s < n; ++s) {
      cand[s] = proven[s] ? 0 : 1;
      ncand += cand[s];
    }
    if (ncand == 0) break;
    bool exhausted_opp = false;
    while (!exhausted_opp) {
      for (StateId s = 0; s < n && ncand > 0; ++s) {
        if (!cand[s]) continue;
        const std::int32_t mp =
            detail::play_min_priority(g, next, s, seen, ++stamp);
        if ((mp % 2 == 0) != want_even) {
          cand[s] = 0;
          --ncand;
        }
      }
      if (ncand == 0) break;
      exhausted_opp = !advance(opp, opp_idx);
    }
    if (!exhausted_opp) rewind(opp, opp_idx);
    for (StateId s = 0; s < n; ++s)
      if (cand[s] && !proven[s]) {
        proven[s] = 1;
        --remaining;
      }
    if (remaining == 0) break;
  } while (advance(own, own_idx));

  std::vector<StateId> region;
  for (StateId s = 0; s < n; ++s)
    if (proven[s]) region.push_back(s);
  return region;
}

// Winning-region partition by exhaustive enumeration for player 1; the
// complement is player 2's region (the game is determined).
inline std::pair<std::vector<StateId>, std::vector<StateId>> solve_bruteforce(
    const GameGraph& g, std::uint64_t limit = 10'000'000) {
  const std::vector<StateId> w1 = bruteforce_region(g, Player::p1, limit);
  std::vector<StateId> w2;
  std::size_t k = 0;
  for (StateId s = 0; s < g.state_count(); ++s) {
    if (k < w1.size() && w1[k] == s)
      ++k;
    else
      w2.push_back(s);
  }
  return {w1, w2};
}

/*
 * The classical decision procedure, kept deliberately quadratic as a
 * baseline: each priority layer rescans every remaining state for targets
 * and materializes the surviving subgame as a fresh graph. Produces the
 * same partition and strategies as solve(); its target_scan_steps counter
 * records the full-rescan work, which grows with the sum of the shrinking
 * game sizes rather than with n.
 */
inline Solution solve_naive(const GameGraph& g) {
  const StateId n = g.state_count();
  Solution sol;
  sol.winner.assign(n, Player::p1);
  sol.strategy1.choice.assign(n, no_state);
  sol.strategy2.choice.assign(n, no_state);

  GameGraph cur = g;
  std::vector<StateId> to_orig(n);
  std::iota(to_orig.begin(), to_orig.end(), 0);

  for (std::int32_t i = 0; i < g.priority_count(); ++i) {
    std::vector<StateId> targets;
    for (StateId s = 0; s < cur.state_count(); ++s) {
      ++sol.work.target_scan_steps;
      if (cur.priority(s) == i) targets.push_back(s);
    }
    if (targets.empty()) continue;
    const Player who = player_for_priority(i);
    MemorylessStrategy& strategy = who == Player::p1 ? sol.strategy1 : sol.strategy2;

    for (StateId s : targets)
      if (cur.owner(s) == who)
        strategy.choice[to_orig[s]] = to_orig[cur.successors(s)[0]];

    AliveMask alive(cur);
    Attractor engine(cur);
    const AttractorResult layer = engine.attract(alive, targets, who);
    sol.work.edge_relaxations += engine.work().edge_relaxations;
    sol.work.counter_inits += engine.work().counter_inits;

    std::vector<std::uint8_t> removed(cur.state_count(), 0);
    for (std::size_t k = 0; k < layer.members.size(); ++k) {
      const StateId s = layer.members[k];
      removed[s] = 1;
      sol.winner[to_orig[s]] = who;
      if (layer.strategy[k] != no_state)
        strategy.choice[to_orig[s]] = to_orig[layer.strategy[k]];
    }

    std::vector<StateId> keep;
    for (StateId s = 0; s < cur.state_count(); ++s)
      if (!removed[s]) keep.push_back(s);
    if (keep.empty()) break;

    Subgame sub = induced_subgame(cur, keep);
    std::vector<StateId> next_orig(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k)
      next_orig[k] = to_orig[sub.to_parent[k]];
    cur = std::move(sub.game);
    to_orig = std::move(next_orig);
  }
  return sol;
}

struct VerificationReport {
  bool ok = false;
  bool ok_p1 = false;
  bool ok_p2 = false;
  StateId counterexample = no_state;  // first claimed state the check rejects
};

namespace detail {

// g with `p`'s moves pinned to the solution's choices on p's claimed
// region; everything else keeps its edges.
inline GameGraph pin_strategy(const GameGraph& g, Player p, const Solution& sol) {
  const MemorylessStrategy& strategy = p == Player::p1 ? sol.strategy1 : sol.strategy2;
  std::vector<std::pair<StateId, StateId>> edges;
  edges.reserve(g.edge_count());
  for (StateId s = 0; s < g.state_count(); ++s) {
    if (g.owner(s) == p && sol.winner[s] == p) {
      edges.emplace_back(s, strategy.choice[s]);
    } else {
      for (StateId t : g.successors(s)) edges.emplace_back(s, t);
    }
  }
  return GameGraph(g.owners(), g.priorities(), edges);
}

}  // namespace detail

/*
 * Certificate check for a claimed solution. Each strategy must be defined
 * exactly on the states its player both owns and claims to win, with every
 * choice an existing edge. Pinning those choices and re-deciding the game
 * then answers whether the fixed moves still admit a win from the whole
 * claimed region: a region state lost in the pinned game is a
 * counterexample, either to the strategy or to the claimed partition
 * itself.
 */
inline VerificationReport verify_strategy(const GameGraph& g, const Solution& sol) {
  const StateId n = g.state_count();
  if (sol.winner.size() != n || sol.strategy1.choice.size() != n ||
      sol.strategy2.choice.size() != n)
    throw GameError(Errc::malformed_strategy, "solution shape does not match game");
  for (StateId s = 0; s < n; ++s) {
    for (Player p : {Player::p1, Player::p2}) {
      const MemorylessStrategy& strategy =
          p == Player::p1 ? sol.strategy1 : sol.strategy2;
      const bool in_domain = g.owner(s) == p && sol.winner[s] == p;
      const StateId c = strategy.choice[s];
      if (!in_domain && c != no_state)
        throw GameError(Errc::malformed_strategy,
                        "choice outside the strategy's domain at state " +
                            std::to_string(s),
                        s);
      if (in_domain && c == no_state)
        throw GameError(Errc::malformed_strategy,
                        "missing choice at state " + std::to_string(s), s);
      if (in_domain && !g.has_edge(s, c))
        throw GameError(Errc::malformed_strategy,
                        "choice at state " + std::to_string(s) + " is not an edge",
                        s);
    }
  }

  VerificationReport rep;
  rep.ok_p1 = true;
  rep.ok_p2 = true;
  {
    const Solution pinned = solve(detail::pin_strategy(g, Player::p1, sol));
    for (StateId s = 0; s < n; ++s) {
      if (sol.winner[s] == Player::p1 && pinned.winner[s] != Player::p1) {
        rep.ok_p1 = false;
        if (rep.counterexample == no_state) rep.counterexample = s;
        break;
      }
    }
  }
  {
    const Solution pinned = solve(detail::pin_strategy(g, Player::p2, sol));
    for (StateId s = 0; s < n; ++s) {
      if (sol.winner[s] == Player::p2 && pinned.winner[s] != Player::p2) {
        rep.ok_p2 = false;
        if (rep.counterexample == no_state) rep.counterexample = s;
        break;
      }
    }
  }
  rep.ok = rep.ok_p1 && rep.ok_p2;
  return rep;
}

}  // namespace wpg

#endif  // WPG_REFERENCE_HPP
