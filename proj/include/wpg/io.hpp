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

#ifndef WPG_IO_HPP
#define WPG_IO_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wpg/game.hpp"
#include "wpg/solver.hpp"

/*
 * Game files:
 *
 *   weakparity <max state id>;
 *   <id> <priority> <owner> <succ>,<succ>,... ["<name>"];
 *
 * One record per line, ';' terminated, whitespace between fields is free,
 * '#' starts a comment line. Owner 0 is player 1, owner 1 is player 2.
 * Quoted names are accepted and discarded. The writer emits the canonical
 * form: states ascending, successors ascending, single spaces, LF line
 * endings, no names; parsing a written game reproduces it exactly.
 *
 * Solution files have one line per state, `<id> <winner> <choice|->`, where
 * the choice column carries the winner's move when the winner owns the
 * state and '-' otherwise. Trailing "# work:" comment lines carry the
 * operation counters and are ignored when parsing.
 */
namespace wpg {

namespace detail {

inline std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t' || v.front() == '\r'))
    v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r'))
    v.remove_suffix(1);
  return v;
}

inline bool parse_u64(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& reason) {
  throw GameError(Errc::parse_error,
                  "line " + std::to_string(line) + ": " + reason, line);
}

// Splits off the next whitespace-delimited token; empty when exhausted.
inline std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  std::size_t k = 0;
  while (k < rest.size() && rest[k] != ' ' && rest[k] != '\t') ++k;
  const std::string_view tok = rest.substr(0, k);
  rest.remove_prefix(k);
  return tok;
}

template <typename Fn>
inline void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++lineno;
    fn(lineno, trim(text.substr(pos, end - pos)));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace detail

inline GameGraph parse_game(std::string_view text) {
  bool have_header = false;
  std::uint64_t max_id = 0;
  std::vector<Player> owners;
  std::vector<std::int32_t> priorities;
  std::vector<std::uint8_t> declared;
  std::vector<std::pair<StateId, StateId>> edges;
  std::size_t last_line = 0;

  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    last_line = lineno;
    if (line.empty() || line.front() == '#') return;
    if (line.back() != ';') {
      if (!have_header && !line.starts_with("weakparity"))
        throw GameError(Errc::missing_header,
                        "line " + std::to_string(lineno) +
                            ": expected 'weakparity <max id>;' header",
                        lineno);
      detail::parse_fail(lineno, "missing ';' terminator");
    }
    std::string_view body = detail::trim(line.substr(0, line.size() - 1));

    if (!have_header) {
      std::string_view rest = body;
      const std::string_view kw = detail::next_token(rest);
      if (kw != "weakparity")
        throw GameError(Errc::missing_header,
                        "line " + std::to_string(lineno) +
                            ": expected 'weakparity <max id>;' header",
                        lineno);
      const std::string_view id_tok = detail::next_token(rest);
      if (!detail::parse_u64(id_tok, max_id))
        detail::parse_fail(lineno, "malformed max state id in header");
      if (!detail::trim(rest).empty())
        detail::parse_fail(lineno, "trailing characters after header");
      if (max_id + 1 >= no_state)
        detail::parse_fail(lineno, "max state id too large");
      const std::size_t n = static_cast<std::size_t>(max_id) + 1;
      owners.assign(n, Player::p1);
      priorities.assign(n, 0);
      declared.assign(n, 0);
      have_header = true;
      return;
    }

    // Optional quoted name at the end of the record; discarded.
    if (!body.empty() && body.back() == '"') {
      const std::size_t open = body.rfind('"', body.size() - 2);
      if (open == std::string_view::npos)
        detail::parse_fail(lineno, "unterminated name quote");
      body = detail::trim(body.substr(0, open));
    }

    std::string_view rest = body;
    std::uint64_t id = 0, priority = 0, owner_code = 0;
    if (!detail::parse_u64(detail::next_token(rest), id))
      detail::parse_fail(lineno, "malformed state id");
    if (id > max_id)
      detail::parse_fail(lineno, "state id " + std::to_string(id) +
                                     " exceeds header maximum " +
                                     std::to_string(max_id));
    if (declared[id])
      throw GameError(Errc::duplicate_state,
                      "line " + std::to_string(lineno) + ": state " +
                          std::to_string(id) + " declared twice",
                      id);
    if (!detail::parse_u64(detail::next_token(rest), priority))
      detail::parse_fail(lineno, "malformed priority");
    if (priority > 0x7FFFFFFFull) detail::parse_fail(lineno, "priority too large");
    if (!detail::parse_u64(detail::next_token(rest), owner_code))
      detail::parse_fail(lineno, "malformed owner");
    if (owner_code > 1)
      detail::parse_fail(lineno, "owner must be 0 (player 1) or 1 (player 2)");

    // The successor list: commas with free whitespace around them.
    std::string succ_list;
    for (char c : rest)
      if (c != ' ' && c != '\t') succ_list.push_back(c);
    if (succ_list.empty())
      detail::parse_fail(lineno, "state " + std::to_string(id) +
                                     " must list at least one successor");
    std::size_t start = 0;
    while (start <= succ_list.size()) {
      const std::size_t comma = succ_list.find(',', start);
      const std::size_t end = comma == std::string::npos ? succ_list.size() : comma;
      std::uint64_t succ = 0;
      if (!detail::parse_u64(
              std::string_view(succ_list).substr(start, end - start), succ))
        detail::parse_fail(lineno, "malformed successor list");
      if (succ > max_id)
        detail::parse_fail(lineno, "successor " + std::to_string(succ) +
                                       " exceeds header maximum");
      edges.emplace_back(static_cast<StateId>(id), static_cast<StateId>(succ));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }

    declared[id] = 1;
    owners[id] = owner_code == 0 ? Player::p1 : Player::p2;
    priorities[id] = static_cast<std::int32_t>(priority);
  });

  if (!have_header)
    throw GameError(Errc::missing_header, "no header line found", last_line);
  // Undeclared states surface as dead ends below.
  return GameGraph(std::move(owners), std::move(priorities), edges);
}

inline std::string write_game(const GameGraph& g) {
  std::string out = "weakparity " + std::to_string(g.state_count() - 1) + ";\n";
  for (StateId s = 0; s < g.state_count(); ++s) {
    out += std::to_string(s);
    out += ' ';
    out += std::to_string(g.priority(s));
    out += ' ';
    out += g.owner(s) == Player::p1 ? '0' : '1';
    out += ' ';
    bool first = true;
    for (StateId t : g.successors(s)) {
      if (!first) out += ',';
      out += std::to_string(t);
      first = false;
    }
    out += ";\n";
  }
  return out;
}

inline std::string write_solution(const Solution& sol) {
  std::string out;
  for (StateId s = 0; s < sol.winner.size(); ++s) {
    const Player w = sol.winner[s];
    const MemorylessStrategy& strategy =
        w == Player::p1 ? sol.strategy1 : sol.strategy2;
    out += std::to_string(s);
    out += w == Player::p1 ? " 1 " : " 2 ";
    out += strategy.choice[s] == no_state ? "-" : std::to_string(strategy.choice[s]);
    out += '\n';
  }
  out += "# work: edge_relaxations=" + std::to_string(sol.work.edge_relaxations) +
         " counter_inits=" + std::to_string(sol.work.counter_inits) +
         " target_scan_steps=" + std::to_string(sol.work.target_scan_steps) +
         " renaming_steps=" + std::to_string(sol.work.renaming_steps) + "\n";
  return out;
}

// Rebuilds the partition and strategies; the work counters are zero. The
// strategy choice of each state is attributed to its winner; whether that
// winner actually owns the state is the verifier's concern.
inline Solution parse_solution(std::string_view text) {
  struct Record {
    std::uint64_t winner;
    StateId choice;
    std::size_t line;
  };
  std::vector<std::pair<std::uint64_t, Record>> records;

  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (line.empty() || line.front() == '#') return;
    std::string_view rest = line;
    std::uint64_t id = 0, winner = 0;
    if (!detail::parse_u64(detail::next_token(rest), id))
      detail::parse_fail(lineno, "malformed state id");
    if (!detail::parse_u64(detail::next_token(rest), winner))
      detail::parse_fail(lineno, "malformed winner");
    if (winner != 1 && winner != 2)
      detail::parse_fail(lineno, "winner must be 1 or 2");
    const std::string_view choice_tok = detail::next_token(rest);
    StateId choice = no_state;
    if (choice_tok != "-") {
      std::uint64_t c = 0;
      if (!detail::parse_u64(choice_tok, c) || c >= no_state)
        detail::parse_fail(lineno, "malformed strategy successor");
      choice = static_cast<StateId>(c);
    }
    if (!detail::trim(rest).empty())
      detail::parse_fail(lineno, "trailing characters after record");
    records.emplace_back(id, Record{winner, choice, lineno});
  });

  if (records.empty())
    throw GameError(Errc::parse_error, "solution has no state lines", 0);

  const std::size_t n = records.size();
  Solution sol;
  sol.winner.assign(n, Player::p1);
  sol.strategy1.choice.assign(n, no_state);
  sol.strategy2.choice.assign(n, no_state);
  std::vector<std::uint8_t> seen(n, 0);
  for (const auto& [id, rec] : records) {
    if (id >= n)
      detail::parse_fail(rec.line, "state id " + std::to_string(id) +
                                       " out of range for " + std::to_string(n) +
                                       " state lines");
    if (seen[id])
      throw GameError(Errc::duplicate_state,
                      "line " + std::to_string(rec.line) + ": state " +
                          std::to_string(id) + " listed twice",
                      id);
    seen[id] = 1;
    sol.winner[id] = rec.winner == 1 ? Player::p1 : Player::p2;
    (rec.winner == 1 ? sol.strategy1 : sol.strategy2).choice[id] = rec.choice;
  }
  return sol;
}

}  // namespace wpg

#endif  // WPG_IO_HPP
