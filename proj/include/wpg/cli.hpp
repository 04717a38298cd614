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

#ifndef WPG_CLI_HPP
#define WPG_CLI_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpg/bench.hpp"
#include "wpg/game.hpp"
#include "wpg/io.hpp"
#include "wpg/reference.hpp"
#include "wpg/solver.hpp"

namespace wpg {

// Exit codes shared by all subcommands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;     // bad input, unreadable file, usage
inline constexpr int exit_rejected = 2;  // verification failed

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace detail

struct SolveOptions {
  std::string input;
  std::string output;  // empty: write the solution to the out stream
  std::string algo = "linear";
  bool stats = false;
};

struct VerifyOptions {
  std::string game;
  std::string solution;
};

struct GenOptions {
  std::string family = "random";
  GenSpec spec;
  std::string output;  // empty: write the game to the out stream
};

struct BenchOptions {
  std::string family = "ladder";
  std::vector<std::uint32_t> sizes;
  std::vector<std::string> algos = {"linear", "naive"};
  std::uint32_t repeats = 1;
  std::string output;  // empty: write the CSV to the out stream
  GenSpec base;        // degree/priority/ratio/seed knobs for random games
};

inline int run_solve(const SolveOptions& opt, std::ostream& out,
                     std::ostream& err) {
  try {
    const GameGraph g = parse_game(detail::read_file(opt.input));
    Solution sol;
    const auto t0 = std::chrono::steady_clock::now();
    if (opt.algo == "linear") {
      sol = solve(g);
    } else if (opt.algo == "naive") {
      sol = solve_naive(g);
    } else if (opt.algo == "brute") {
      sol.winner.assign(g.state_count(), Player::p2);
      for (StateId s : solve_bruteforce(g).first) sol.winner[s] = Player::p1;
      sol.strategy1.choice.assign(g.state_count(), no_state);
      sol.strategy2.choice.assign(g.state_count(), no_state);
    } else {
      err << "error: unknown algorithm: " << opt.algo << "\n";
      return exit_error;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const std::string payload = write_solution(sol);
    if (opt.output.empty())
      out << payload;
    else
      detail::write_file(opt.output, payload);
    if (opt.stats) {
      err << "edge_relaxations=" << sol.work.edge_relaxations << "\n"
          << "counter_inits=" << sol.work.counter_inits << "\n"
          << "target_scan_steps=" << sol.work.target_scan_steps << "\n"
          << "renaming_steps=" << sol.work.renaming_steps << "\n"
          << "wall_ns="
          << std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                 .count()
          << "\n";
    }
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
}

inline int run_verify(const VerifyOptions& opt, std::ostream& out,
                      std::ostream& err) {
  std::optional<GameGraph> g;
  Solution sol;
  try {
    g = parse_game(detail::read_file(opt.game));
    sol = parse_solution(detail::read_file(opt.solution));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  if (sol.winner.size() != g->state_count()) {
    err << "error: solution has " << sol.winner.size() << " states, game has "
        << g->state_count() << "\n";
    return exit_error;
  }
  try {
    const VerificationReport rep = verify_strategy(*g, sol);
    if (rep.ok) {
      out << "ok\n";
      return exit_ok;
    }
    err << "verification failed at state " << rep.counterexample << "\n";
    return exit_rejected;
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    return exit_rejected;
  }
}

inline int run_gen(const GenOptions& opt, std::ostream& out,
                   std::ostream& err) {
  try {
    std::string payload;
    if (opt.family == "random") {
      payload = write_game(random_game(opt.spec));
    } else if (opt.family == "ladder") {
      payload = write_game(ladder_family(opt.spec.states));
    } else {
      err << "error: unknown family: " << opt.family << "\n";
      return exit_error;
    }
    if (opt.output.empty())
      out << payload;
    else
      detail::write_file(opt.output, payload);
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
}

inline int run_bench(const BenchOptions& opt, std::ostream& out,
                     std::ostream& err) {
  try {
    const std::vector<BenchRow> rows =
        bench_rows(family_from_name(opt.family), opt.sizes, opt.algos,
                   opt.repeats, opt.base);
    const std::string csv = bench_csv(rows);
    if (opt.output.empty())
      out << csv;
    else
      detail::write_file(opt.output, csv);
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
}

}  // namespace wpg

#endif  // WPG_CLI_HPP
