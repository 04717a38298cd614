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

#ifndef WPG_GAME_HPP
#define WPG_GAME_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wpg {

using StateId = std::uint32_t;

// Sentinel: absent strategy choice, removed slot, "no such state".
inline constexpr StateId no_state = std::numeric_limits<StateId>::max();

// Player 1 wins a play iff the minimum priority occurring in it is even.
enum class Player : std::uint8_t { p1 = 0, p2 = 1 };

constexpr Player opponent(Player p) noexcept {
  return p == Player::p1 ? Player::p2 : Player::p1;
}

// Priority i is contested by player 1 when i is even, by player 2 when odd.
constexpr Player player_for_priority(std::int32_t priority) noexcept {
  return priority % 2 == 0 ? Player::p1 : Player::p2;
}

enum class Errc {
  empty_game,
  bad_endpoint,
  sink_state,
  not_subgame_closed,
  dead_target,
  out_of_order_call,
  double_removal,
  too_large,
  malformed_strategy,
  parse_error,
  duplicate_state,
  missing_header,
};

// Every library error carries a code plus one numeric detail: the offending
// state id for graph errors, the input line number for parse errors.
class GameError : public std::runtime_error {
 public:
  GameError(Errc code, const std::string& msg, std::uint64_t detail = 0)
      : std::runtime_error(msg), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }
  std::uint64_t detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::uint64_t detail_;
};

/*
 * A finite two-player game graph in compressed sparse row form, forward and
 * reverse. Construction sorts and deduplicates each successor list, so edge
 * iteration order is ascending and every (source, target) pair is stored at
 * most once. Every state must keep at least one successor; the graph is
 * immutable after construction.
 */
class GameGraph {
 public:
  GameGraph(std::vector<Player> owners, std::vector<std::int32_t> priorities,
            std::span<const std::pair<StateId, StateId>> edges)
      : owner_(std::move(owners)), priority_(std::move(priorities)) {
    const std::size_t n = owner_.size();
    if (n == 0) throw GameError(Errc::empty_game, "game has no states");
    if (priority_.size() != n)
      throw std::invalid_argument("owners and priorities differ in length");
    if (n >= static_cast<std::size_t>(no_state))
      throw std::invalid_argument("too many states");
    for (std::size_t s = 0; s < n; ++s)
      if (priority_[s] < 0) throw std::invalid_argument("negative priority");

    for (const auto& [u, v] : edges) {
      if (u >= n)
        throw GameError(Errc::bad_endpoint,
                        "edge source " + std::to_string(u) + " out of range", u);
      if (v >= n)
        throw GameError(Errc::bad_endpoint,
                        "edge target " + std::to_string(v) + " out of range", v);
    }

    // Forward lists: counting sort by source, then per-state sort + dedup,
    // compacting in place (the write cursor never passes the read cursor).
    succ_offset_.assign(n + 1, 0);
    for (const auto& e : edges) ++succ_offset_[e.first + 1];
    for (std::size_t s = 0; s < n; ++s) succ_offset_[s + 1] += succ_offset_[s];
    succ_.resize(edges.size());
    {
      std::vector<std::uint32_t> next(succ_offset_.begin(), succ_offset_.end() - 1);
      for (const auto& [u, v] : edges) succ_[next[u]++] = v;
    }
    std::vector<std::uint32_t> packed_offset(n + 1, 0);
    std::uint32_t w = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const auto b = succ_.begin() + succ_offset_[s];
      const auto e = succ_.begin() + succ_offset_[s + 1];
      std::sort(b, e);
      const auto ue = std::unique(b, e);
      if (b == ue)
        throw GameError(Errc::sink_state,
                        "state " + std::to_string(s) + " has no successors", s);
      for (auto it = b; it != ue; ++it) succ_[w++] = *it;
      packed_offset[s + 1] = w;
    }
    succ_.resize(w);
    succ_offset_ = std::move(packed_offset);

    // Reverse lists. Sources are visited in ascending order, so each
    // predecessor list comes out ascending as well.
    pred_offset_.assign(n + 1, 0);
    for (StateId v : succ_) ++pred_offset_[v + 1];
    for (std::size_t s = 0; s < n; ++s) pred_offset_[s + 1] += pred_offset_[s];
    pred_.resize(succ_.size());
    {
      std::vector<std::uint32_t> next(pred_offset_.begin(), pred_offset_.end() - 1);
      for (StateId u = 0; u < n; ++u)
        for (StateId v : successors(u)) pred_[next[v]++] = u;
    }

    priority_count_ = 1 + *std::max_element(priority_.begin(), priority_.end());
  }

  StateId state_count() const noexcept { return static_cast<StateId>(owner_.size()); }
  std::uint64_t edge_count() const noexcept { return succ_.size(); }

  Player owner(StateId s) const { return owner_[s]; }
  const std::vector<Player>& owners() const noexcept { return owner_; }
  std::int32_t priority(StateId s) const { return priority_[s]; }
  const std::vector<std::int32_t>& priorities() const noexcept { return priority_; }

  // 1 + the maximum priority present.
  std::int32_t priority_count() const noexcept { return priority_count_; }

  std::span<const StateId> successors(StateId s) const {
    return {succ_.data() + succ_offset_[s], succ_.data() + succ_offset_[s + 1]};
  }
  std::span<const StateId> predecessors(StateId s) const {
    return {pred_.data() + pred_offset_[s], pred_.data() + pred_offset_[s + 1]};
  }

  std::uint32_t out_degree(StateId s) const {
    return succ_offset_[s + 1] - succ_offset_[s];
  }
  std::uint32_t in_degree(StateId s) const {
    return pred_offset_[s + 1] - pred_offset_[s];
  }

  bool has_edge(StateId u, StateId v) const {
    const auto sp = successors(u);
    return std::binary_search(sp.begin(), sp.end(), v);
  }

 private:
  std::vector<Player> owner_;
  std::vector<std::int32_t> priority_;
  std::vector<std::uint32_t> succ_offset_;
  std::vector<StateId> succ_;
  std::vector<std::uint32_t> pred_offset_;
  std::vector<StateId> pred_;
  std::int32_t priority_count_ = 0;
};

/*
 * Mutable liveness overlay for one solver run. Tracks, for every state, the
 * number of successors still alive; kill() updates those counts through the
 * reverse lists, so each edge is charged exactly once when its target dies.
 * The mask must not outlive the graph it was built from.
 */
class AliveMask {
 public:
  explicit AliveMask(const GameGraph& g)
      : g_(&g), alive_(g.state_count(), 1), live_outdeg_(g.state_count()),
        live_(g.state_count()) {
    for (StateId s = 0; s < g.state_count(); ++s) live_outdeg_[s] = g.out_degree(s);
  }

  bool alive(StateId s) const { return alive_[s] != 0; }
  std::uint32_t live_out_degree(StateId s) const { return live_outdeg_[s]; }
  std::uint32_t live_count() const noexcept { return live_; }

  // Pre: s is alive.
  void kill(StateId s) {
    assert(alive_[s]);
    alive_[s] = 0;
    --live_;
    for (StateId u : g_->predecessors(s))
      if (alive_[u]) --live_outdeg_[u];
  }

 private:
  const GameGraph* g_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> live_outdeg_;
  std::uint32_t live_;
};

struct Subgame {
  GameGraph game;
  std::vector<StateId> to_parent;  // local id -> parent id, ascending
};

/*
 * Restricts g to the kept states and renumbers them densely, preserving
 * relative order. Every kept state must retain at least one successor
 * inside the kept set.
 */
inline Subgame induced_subgame(const GameGraph& g, std::span<const StateId> keep) {
  const StateId n = g.state_count();
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= n) throw std::invalid_argument("kept state out of range");
    if (k > 0 && keep[k] <= keep[k - 1])
      throw std::invalid_argument("kept states must be strictly increasing");
  }
  std::vector<StateId> local(n, no_state);
  for (std::size_t k = 0; k < keep.size(); ++k) local[keep[k]] = static_cast<StateId>(k);

  std::vector<Player> owners;
  std::vector<std::int32_t> priorities;
  owners.reserve(keep.size());
  priorities.reserve(keep.size());
  std::vector<std::pair<StateId, StateId>> edges;
  for (StateId s : keep) {
    owners.push_back(g.owner(s));
    priorities.push_back(g.priority(s));
    bool any = false;
    for (StateId t : g.successors(s)) {
      if (local[t] == no_state) continue;
      edges.emplace_back(local[s], local[t]);
      any = true;
    }
    if (!any)
      throw GameError(Errc::not_subgame_closed,
                      "state " + std::to_string(s) +
                          " keeps no successor inside the subgame",
                      s);
  }
  return {GameGraph(std::move(owners), std::move(priorities), edges),
          std::vector<StateId>(keep.begin(), keep.end())};
}

/*
 * A set u is closed for `player` when the player cannot leave it and the
 * opponent can stay: every player-owned state in u has all successors in u,
 * and every opponent-owned state in u has some successor in u.
 */
inline bool is_closed(const GameGraph& g, std::span<const StateId> u, Player player) {
  std::vector<std::uint8_t> in(g.state_count(), 0);
  for (StateId s : u) {
    if (s >= g.state_count()) throw std::invalid_argument("state out of range");
    in[s] = 1;
  }
  for (StateId s : u) {
    if (g.owner(s) == player) {
      for (StateId t : g.successors(s))
        if (!in[t]) return false;
    } else {
      bool any = false;
      for (StateId t : g.successors(s))
        if (in[t]) { any = true; break; }
      if (!any) return false;
    }
  }
  return true;
}

}  // namespace wpg

#endif  // WPG_GAME_HPP
