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

#include <iostream>

#include <CLI11.hpp>

#include "wpg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"weak-parity game solver"};
  app.require_subcommand(1);

  wpg::SolveOptions sopt;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "decide a game and emit a solution");
  solve_cmd->add_option("--in", sopt.input, "game file")->required();
  solve_cmd->add_option("--out", sopt.output,
                        "solution file (stdout when omitted)");
  solve_cmd->add_option("--algo", sopt.algo, "linear, naive or brute")
      ->check(CLI::IsMember({"linear", "naive", "brute"}));
  solve_cmd->add_flag("--stats", sopt.stats,
                      "print operation counters on stderr");

  wpg::VerifyOptions vopt;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a solution against its game");
  verify_cmd->add_option("--game", vopt.game, "game file")->required();
  verify_cmd->add_option("--solution", vopt.solution, "solution file")
      ->required();

  wpg::GenOptions gopt;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a game");
  gen_cmd->add_option("--family", gopt.family, "random or ladder");
  gen_cmd->add_option("--states", gopt.spec.states, "number of states")
      ->required();
  gen_cmd->add_option("--priorities", gopt.spec.priorities,
                      "number of priorities (random family)");
  gen_cmd->add_option("--avg-degree", gopt.spec.avg_degree,
                      "average out-degree (random family)");
  gen_cmd->add_option("--owner-ratio", gopt.spec.owner_ratio,
                      "fraction of player 1 states (random family)");
  gen_cmd->add_option("--seed", gopt.spec.seed, "generator seed");
  gen_cmd->add_option("--out", gopt.output, "game file (stdout when omitted)");

  wpg::BenchOptions bopt;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time the solvers over a size sweep");
  bench_cmd->add_option("--family", bopt.family, "ladder or random");
  bench_cmd->add_option("--sizes", bopt.sizes, "state counts, ascending")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--algo", bopt.algos, "subset of linear,naive")
      ->delimiter(',');
  bench_cmd->add_option("--repeats", bopt.repeats, "runs per configuration");
  bench_cmd->add_option("--priorities", bopt.base.priorities,
                        "number of priorities (random family)");
  bench_cmd->add_option("--avg-degree", bopt.base.avg_degree,
                        "average out-degree (random family)");
  bench_cmd->add_option("--owner-ratio", bopt.base.owner_ratio,
                        "fraction of player 1 states (random family)");
  bench_cmd->add_option("--seed", bopt.base.seed, "base generator seed");
  bench_cmd->add_option("--csv", bopt.output, "CSV file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wpg::exit_error;
  }

  if (solve_cmd->parsed()) return wpg::run_solve(sopt, std::cout, std::cerr);
  if (verify_cmd->parsed()) return wpg::run_verify(vopt, std::cout, std::cerr);
  if (gen_cmd->parsed()) return wpg::run_gen(gopt, std::cout, std::cerr);
  if (bench_cmd->parsed()) return wpg::run_bench(bopt, std::cout, std::cerr);
  return wpg::exit_error;
}
