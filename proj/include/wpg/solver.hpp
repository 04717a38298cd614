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

#ifndef WPG_SOLVER_HPP
#define WPG_SOLVER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wpg/attractor.hpp"
#include "wpg/counters.hpp"
#include "wpg/game.hpp"

namespace wpg {

/*
 * Counting-sort rename of states by priority, with the bookkeeping needed
 * to enumerate each priority bucket once while states disappear in between.
 *
 *   order()     position -> state, stable and priority-nondecreasing
 *   position()  state -> position, the inverse of order()
 *   slot(k)     order()[k], or no_state once that state was removed
 *
 * obtain_targets must be called with priorities 0, 1, ..., d-1 in that
 * order; each call scans exactly its bucket (ct[i] slots), skipping removed
 * ones, and advances the cursor, so a full sweep visits each of the n slots
 * exactly once regardless of how removals interleave.
 */
class RenamingTables {
 public:
  RenamingTables(std::span<const std::int32_t> priorities, std::int32_t priority_count)
      : ct_(static_cast<std::size_t>(priority_count), 0),
        offset_(static_cast<std::size_t>(priority_count) + 1, 0),
        order_(priorities.size()),
        position_(priorities.size()),
        slot_(priorities.size()) {
    const std::size_t n = priorities.size();
    for (std::size_t s = 0; s < n; ++s) {
      ++ct_[priorities[s]];
      ++build_steps_;
    }
    for (std::int32_t i = 0; i < priority_count; ++i) offset_[i + 1] = offset_[i] + ct_[i];
    std::vector<std::uint32_t> next(offset_.begin(), offset_.end() - 1);
    for (std::size_t s = 0; s < n; ++s) {
      const std::uint32_t k = next[priorities[s]]++;
      order_[k] = static_cast<StateId>(s);
      position_[s] = k;
      ++build_steps_;
    }
    slot_ = order_;
  }

  std::uint32_t bucket_size(std::int32_t priority) const { return ct_[priority]; }
  std::uint32_t bucket_offset(std::int32_t priority) const { return offset_[priority]; }
  const std::vector<StateId>& order() const noexcept { return order_; }
  const std::vector<std::uint32_t>& position() const noexcept { return position_; }
  StateId slot(std::uint32_t k) const { return slot_[k]; }
  std::uint32_t cursor() const noexcept { return cursor_; }

  // The states of `priority` still present, in rename order. Callable once
  // per priority, in increasing priority order.
  std::vector<StateId> obtain_targets(std::int32_t priority) {
    if (priority != next_priority_)
      throw GameError(Errc::out_of_order_call,
                      "expected priority " + std::to_string(next_priority_) +
                          ", got " + std::to_string(priority),
                      static_cast<std::uint64_t>(priority));
    ++next_priority_;
    std::vector<StateId> out;
    const std::uint32_t end = offset_[priority + 1];
    for (std::uint32_t k = cursor_; k < end; ++k) {
      ++scan_steps_;
      if (slot_[k] != no_state) out.push_back(slot_[k]);
    }
    cursor_ = end;
    return out;
  }

  // Pre: s has not been removed before.
  void mark_removed(StateId s) {
    StateId& v = slot_[position_[s]];
    if (v == no_state)
      throw GameError(Errc::double_removal,
                      "state " + std::to_string(s) + " removed twice", s);
    v = no_state;
  }

  std::uint64_t scan_steps() const noexcept { return scan_steps_; }
  std::uint64_t build_steps() const noexcept { return build_steps_; }

 private:
  std::vector<std::uint32_t> ct_;
  std::vector<std::uint32_t> offset_;
  std::vector<StateId> order_;
  std::vector<std::uint32_t> position_;
  std::vector<StateId> slot_;
  std::uint32_t cursor_ = 0;
  std::int32_t next_priority_ = 0;
  std::uint64_t scan_steps_ = 0;
  std::uint64_t build_steps_ = 0;
};

// choice[s] is the chosen successor, or no_state where the strategy is
// undefined (states the player does not own, or does not win).
struct MemorylessStrategy {
  std::vector<StateId> choice;
};

struct Solution {
  std::vector<Player> winner;
  MemorylessStrategy strategy1;
  MemorylessStrategy strategy2;
  WorkCounters work;

  std::vector<StateId> region(Player p) const {
    std::vector<StateId> out;
    for (StateId s = 0; s < winner.size(); ++s)
      if (winner[s] == p) out.push_back(s);
    return out;
  }
};

/*
 * Decides the whole game in time proportional to n + m.
 *
 * After the counting-sort rename, priorities are processed in increasing
 * order: the still-alive states of priority i are read off the rename
 * tables, their attractor for the player of that parity is computed with
 * the lazy-counter engine, attributed to that player's winning region, and
 * removed. What survives a layer is again a game in which every state
 * keeps a move, so no subgraph is ever materialized; the alive mask is the
 * subgame.
 *
 * Strategies: inside a layer the attractor edge is recorded (it decreases
 * the forcing rank); a target state owned by the deciding player gets its
 * lowest-indexed successor alive at the start of the layer, which exists
 * because the remaining subgame has no dead ends, and is sound because the
 * play has already visited the layer's priority, the minimum it will ever
 * see.
 */
inline Solution solve(const GameGraph& g) {
  const StateId n = g.state_count();
  RenamingTables tables(g.priorities(), g.priority_count());
  AliveMask alive(g);
  Attractor engine(g);

  Solution sol;
  sol.winner.assign(n, Player::p1);
  sol.strategy1.choice.assign(n, no_state);
  sol.strategy2.choice.assign(n, no_state);

  for (std::int32_t i = 0; i < g.priority_count(); ++i) {
    const std::vector<StateId> targets = tables.obtain_targets(i);
    if (targets.empty()) continue;
    const Player who = player_for_priority(i);
    MemorylessStrategy& strategy = who == Player::p1 ? sol.strategy1 : sol.strategy2;

    for (StateId s : targets) {
      if (g.owner(s) != who) continue;
      for (StateId t : g.successors(s)) {
        if (alive.alive(t)) {
          strategy.choice[s] = t;
          break;
        }
      }
    }

    const AttractorResult layer = engine.attract_with_removal(
        alive, targets, who, [&tables](StateId s) { tables.mark_removed(s); });

    for (std::size_t k = 0; k < layer.members.size(); ++k) {
      const StateId s = layer.members[k];
      sol.winner[s] = who;
      if (layer.strategy[k] != no_state) strategy.choice[s] = layer.strategy[k];
    }
  }

  sol.work.edge_relaxations = engine.work().edge_relaxations;
  sol.work.counter_inits = engine.work().counter_inits;
  sol.work.target_scan_steps = tables.scan_steps();
  sol.work.renaming_steps = tables.build_steps();
  return sol;
}

}  // namespace wpg

#endif  // WPG_SOLVER_HPP
