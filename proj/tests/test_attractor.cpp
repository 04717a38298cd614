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

#include <algorithm>
#include <vector>

#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "wpg/attractor.hpp"
#include "wpg/game.hpp"
#include "wpg/generators.hpp"

using namespace wpg;
using test::game;

namespace {

GameGraph three_state() {
  return game({0, 1, 1}, {1, 0, 1}, {{0, 1}, {0, 2}, {1, 1}, {2, 2}});
}

std::vector<StateId> sorted_members(const AttractorResult& r) {
  std::vector<StateId> v = r.members;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("four-state chain attractor with escape") {
  // 0 can escape via its self-loop, so only 1, 2, 3 are forced to 3.
  const GameGraph g = game({1, 1, 0, 0}, {0, 0, 0, 0},
                           {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
  AliveMask alive(g);
  const AttractorResult r =
      attract(g, alive, std::vector<StateId>{3}, Player::p1);

  REQUIRE(r.members == std::vector<StateId>{3, 2, 1});
  REQUIRE(r.ranks == std::vector<std::uint32_t>{0, 1, 2});
  REQUIRE(r.strategy[0] == no_state);
  REQUIRE(r.strategy[1] == 3);         // player-owned state 2 moves to 3
  REQUIRE(r.strategy[2] == no_state);  // opponent state 1 gets no choice
}

TEST_CASE("attracting to every state is rank zero everywhere") {
  const GameGraph g = three_state();
  AliveMask alive(g);
  const AttractorResult r =
      attract(g, alive, std::vector<StateId>{0, 1, 2}, Player::p2);
  REQUIRE(r.members == std::vector<StateId>{0, 1, 2});
  REQUIRE(r.ranks == std::vector<std::uint32_t>{0, 0, 0});
  for (StateId v : r.strategy) REQUIRE(v == no_state);
}

TEST_CASE("three-state attractor to the even loop") {
  const GameGraph g = three_state();
  AliveMask alive(g);
  const AttractorResult r =
      attract(g, alive, std::vector<StateId>{1}, Player::p1);
  REQUIRE(r.members == std::vector<StateId>{1, 0});
  REQUIRE(r.ranks == std::vector<std::uint32_t>{0, 1});
  REQUIRE(r.strategy == std::vector<StateId>{no_state, 1});
}

TEST_CASE("removal callback runs once per member in inclusion order") {
  const GameGraph g = three_state();
  AliveMask alive(g);
  Attractor engine(g);
  std::vector<StateId> removed;
  const AttractorResult r = engine.attract_with_removal(
      alive, std::vector<StateId>{1}, Player::p1,
      [&removed](StateId s) { removed.push_back(s); });
  REQUIRE(removed == std::vector<StateId>{1, 0});
  REQUIRE(removed == r.members);
  REQUIRE_FALSE(alive.alive(0));
  REQUIRE_FALSE(alive.alive(1));
  REQUIRE(alive.alive(2));
  REQUIRE(alive.live_out_degree(2) == 1);
}

TEST_CASE("empty target set yields an empty attractor") {
  const GameGraph g = three_state();
  AliveMask alive(g);
  std::size_t calls = 0;
  const AttractorResult r = attract_with_removal(
      g, alive, std::vector<StateId>{}, Player::p1, [&calls](StateId) { ++calls; });
  REQUIRE(r.members.empty());
  REQUIRE(calls == 0);
  REQUIRE(alive.live_count() == 3);
}

TEST_CASE("attracting every alive state removes every alive state") {
  const GameGraph g = three_state();
  AliveMask alive(g);
  std::size_t calls = 0;
  attract_with_removal(g, alive, std::vector<StateId>{0, 1, 2}, Player::p2,
                       [&calls](StateId) { ++calls; });
  REQUIRE(calls == 3);
  REQUIRE(alive.live_count() == 0);
}

TEST_CASE("dead or invalid targets are rejected, duplicates collapse") {
  const GameGraph g = three_state();
  AliveMask alive(g);
  REQUIRE_THROWS_AS(attract(g, alive, std::vector<StateId>{9}, Player::p1),
                    std::invalid_argument);

  const AttractorResult dup =
      attract(g, alive, std::vector<StateId>{1, 1, 1}, Player::p1);
  REQUIRE(dup.members == std::vector<StateId>{1, 0});

  alive.kill(1);
  try {
    attract(g, alive, std::vector<StateId>{1}, Player::p1);
    FAIL("expected a dead-target error");
  } catch (const GameError& e) {
    REQUIRE(e.code() == Errc::dead_target);
    REQUIRE(e.detail() == 1);
  }
}

TEST_CASE("engine reuse matches fresh engines") {
  const GameGraph g = random_game(test::sweep_spec(0xEE, 3, 12, 3));
  AliveMask alive(g);
  Attractor engine(g);
  SplitMix64 rng(7);
  for (int round = 0; round < 20; ++round) {
    const Player player = rng.below(2) == 0 ? Player::p1 : Player::p2;
    std::vector<StateId> targets;
    for (StateId s = 0; s < g.state_count(); ++s)
      if (alive.alive(s) && rng.below(3) == 0) targets.push_back(s);
    if (targets.empty()) continue;
    const AttractorResult reused = engine.attract(alive, targets, player);
    const AttractorResult fresh = attract(g, alive, targets, player);
    REQUIRE(reused.members == fresh.members);
    REQUIRE(reused.ranks == fresh.ranks);
    REQUIRE(reused.strategy == fresh.strategy);
  }
}

TEST_CASE("attractor agrees with the round-based oracle") {
  std::size_t nontrivial = 0;
  for (std::uint64_t k = 0; k < 300; ++k) {
    const GameGraph g = random_game(test::sweep_spec(0x0AC1E, k, 8, 4));
    AliveMask alive(g);
    SplitMix64 rng(k ^ 0x5EED);

    // Occasionally run in a masked subgame: remove a random attractor
    // first, which keeps every survivor with a live move.
    if (rng.below(3) == 0 && g.state_count() > 2) {
      const StateId t = static_cast<StateId>(rng.below(g.state_count()));
      attract_with_removal(g, alive, std::vector<StateId>{t},
                           rng.below(2) == 0 ? Player::p1 : Player::p2,
                           [](StateId) {});
    }

    std::vector<StateId> targets;
    for (StateId s = 0; s < g.state_count(); ++s)
      if (alive.alive(s) && rng.below(4) == 0) targets.push_back(s);
    if (targets.empty()) continue;
    const Player player = rng.below(2) == 0 ? Player::p1 : Player::p2;

    const AttractorResult got = attract(g, alive, targets, player);
    const test::OracleAttractor want = test::oracle_attract(g, alive, targets, player);
    REQUIRE(test::matches_oracle(g, got, want));
    REQUIRE(test::strategy_is_forcing(g, alive, got, player));
    REQUIRE(test::complement_is_trap(g, alive, got, player));

    // Idempotence: attracting to the members changes nothing.
    const AttractorResult again = attract(g, alive, got.members, player);
    REQUIRE(sorted_members(again) == sorted_members(got));
    for (std::uint32_t r : again.ranks) REQUIRE(r == 0);

    if (got.members.size() > targets.size()) ++nontrivial;
  }
  REQUIRE(nontrivial > 50);
}

TEST_CASE("touched edges equal the in-edges of the members when all alive") {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const GameGraph g = random_game(test::sweep_spec(0xB0B, k, 10, 3));
    AliveMask alive(g);
    SplitMix64 rng(k);
    std::vector<StateId> targets{static_cast<StateId>(rng.below(g.state_count()))};
    const Player player = rng.below(2) == 0 ? Player::p1 : Player::p2;
    const AttractorResult r = attract(g, alive, targets, player);

    std::uint64_t in_edges = 0;
    for (StateId s : r.members) in_edges += g.in_degree(s);
    REQUIRE(r.touched_edges == in_edges);

    // Counter initializations touch only predecessors of members.
    Attractor engine(g);
    engine.attract(alive, targets, player);
    std::vector<std::uint8_t> is_pred(g.state_count(), 0);
    for (StateId s : r.members)
      for (StateId u : g.predecessors(s)) is_pred[u] = 1;
    const std::uint64_t preds =
        static_cast<std::uint64_t>(std::count(is_pred.begin(), is_pred.end(), 1));
    REQUIRE(engine.work().counter_inits <= preds);
    REQUIRE(engine.work().edge_relaxations == r.touched_edges);
  }
}
