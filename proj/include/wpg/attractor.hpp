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

#ifndef WPG_ATTRACTOR_HPP
#define WPG_ATTRACTOR_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wpg/counters.hpp"
#include "wpg/game.hpp"

namespace wpg {

/*
 * Result of one attractor computation. The three vectors are aligned:
 * members[k] was the k-th state included, ranks[k] is the length of its
 * shortest forcing distance to the targets (0 exactly for targets), and
 * strategy[k] is the rank-decreasing successor recorded for states owned
 * by the attracting player outside the targets (no_state otherwise).
 * touched_edges counts every predecessor slot scanned, dead or alive.
 */
struct AttractorResult {
  std::vector<StateId> members;
  std::vector<std::uint32_t> ranks;
  std::vector<StateId> strategy;
  std::uint64_t touched_edges = 0;
};

/*
 * Backward-induction attractor engine over a fixed graph.
 *
 * All scratch arrays are allocated once, at construction. Per call the
 * engine does no O(n) re-initialization: membership marks and successor
 * counters are validated by an epoch stamp, and a counter is (re)set only
 * when some successor of its state is first processed in that call. The
 * inclusion test for opponent states compares the per-call counter with
 * the live out-degree, which the alive mask keeps frozen during a call
 * (removals happen after the fixpoint completes).
 *
 * The FIFO worklist makes inclusion order breadth-first, so ranks come out
 * exactly as the backward strata: targets, then states forcible in one
 * step, and so on. For a state owned by the attracting player, the first
 * processed successor triggers inclusion and has the least rank among its
 * successors in the result; recording it yields a strategy whose rank
 * strictly decreases along every move, reaching a target within |members|
 * steps whatever the opponent does.
 */
class Attractor {
 public:
  explicit Attractor(const GameGraph& g)
      : g_(&g),
        counter_(g.state_count(), 0),
        counter_stamp_(g.state_count(), 0),
        counter_used_(g.state_count(), 0),
        member_stamp_(g.state_count(), 0) {}

  // Computes the attractor of `targets` for `player` within the alive
  // subgame. Duplicate targets are accepted and collapse; dead targets are
  // an error. The alive mask is not modified.
  AttractorResult attract(const AliveMask& alive, std::span<const StateId> targets,
                          Player player) {
    return run(alive, targets, player);
  }

  // As attract(), then invokes on_remove(s) once per member in inclusion
  // order and kills the member, so live out-degrees of the survivors are
  // decremented exactly once per edge into the removed set.
  template <typename OnRemove>
  AttractorResult attract_with_removal(AliveMask& alive,
                                       std::span<const StateId> targets,
                                       Player player, OnRemove&& on_remove) {
    AttractorResult res = run(alive, targets, player);
    for (StateId s : res.members) {
      on_remove(s);
      alive.kill(s);
    }
    return res;
  }

  // Cumulative over all calls on this engine.
  const WorkCounters& work() const noexcept { return work_; }

 private:
  AttractorResult run(const AliveMask& alive, std::span<const StateId> targets,
                      Player player) {
    ++epoch_;
    AttractorResult res;
    res.members.reserve(targets.size());

    for (StateId t : targets) {
      if (t >= g_->state_count()) throw std::invalid_argument("target out of range");
      if (!alive.alive(t))
        throw GameError(Errc::dead_target,
                        "target state " + std::to_string(t) + " is not alive", t);
      if (member_stamp_[t] == epoch_) continue;
      include(res, t, 0, no_state);
    }

    for (std::size_t head = 0; head < res.members.size(); ++head) {
      const StateId t = res.members[head];
      const std::uint32_t next_rank = res.ranks[head] + 1;
      for (StateId u : g_->predecessors(t)) {
        ++res.touched_edges;
        if (!alive.alive(u)) continue;
        if (counter_stamp_[u] != epoch_) {
          counter_stamp_[u] = epoch_;
          counter_[u] = 0;
          if (!counter_used_[u]) {
            counter_used_[u] = 1;
            ++work_.counter_inits;
          }
        }
        ++counter_[u];
        if (member_stamp_[u] == epoch_) continue;
        if (g_->owner(u) == player) {
          include(res, u, next_rank, t);
        } else if (counter_[u] == alive.live_out_degree(u)) {
          include(res, u, next_rank, no_state);
        }
      }
    }

    work_.edge_relaxations += res.touched_edges;
    return res;
  }

  void include(AttractorResult& res, StateId s, std::uint32_t rank, StateId via) {
    member_stamp_[s] = epoch_;
    res.members.push_back(s);
    res.ranks.push_back(rank);
    res.strategy.push_back(via);
  }

  const GameGraph* g_;
  std::vector<std::uint32_t> counter_;
  std::vector<std::uint32_t> counter_stamp_;
  std::vector<std::uint8_t> counter_used_;
  std::vector<std::uint32_t> member_stamp_;
  std::uint32_t epoch_ = 0;
  WorkCounters work_;
};

// One-shot conveniences; allocate fresh scratch per call.
inline AttractorResult attract(const GameGraph& g, const AliveMask& alive,
                               std::span<const StateId> targets, Player player) {
  Attractor engine(g);
  return engine.attract(alive, targets, player);
}

template <typename OnRemove>
inline AttractorResult attract_with_removal(const GameGraph& g, AliveMask& alive,
                                            std::span<const StateId> targets,
                                            Player player, OnRemove&& on_remove) {
  Attractor engine(g);
  return engine.attract_with_removal(alive, targets, player,
                                     std::forward<OnRemove>(on_remove));
}

}  // namespace wpg

#endif  // WPG_ATTRACTOR_HPP
