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

#ifndef WPG_COUNTERS_HPP
#define WPG_COUNTERS_HPP

#include <cstdint>

namespace wpg {

/*
 * Deterministic operation counts for one solver run.
 *
 *   edge_relaxations  predecessor slots scanned by attractor computations.
 *                     A full solve scans each edge exactly once (when its
 *                     target is absorbed), so the total equals m.
 *   counter_inits     states whose lazy successor counter was initialized
 *                     at least once by the engine; at most n per run.
 *   target_scan_steps slots visited by target-bucket scans; a full solve
 *                     visits each of the n slots exactly once.
 *   renaming_steps    state visits made while building the rename tables
 *                     (one counting pass plus one placement pass, 2n).
 */
struct WorkCounters {
  std::uint64_t edge_relaxations = 0;
  std::uint64_t counter_inits = 0;
  std::uint64_t target_scan_steps = 0;
  std::uint64_t renaming_steps = 0;

  std::uint64_t total() const noexcept {
    return edge_relaxations + counter_inits + target_scan_steps + renaming_steps;
  }
};

}  // namespace wpg

#endif  // WPG_COUNTERS_HPP
