// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "qwalk/coin.hpp"
#include "qwalk/cost.hpp"
#include "qwalk/csd.hpp"
#include "qwalk/error.hpp"
#include "qwalk/fixtures.hpp"
#include "qwalk/io.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string graph_path;
  int random_nodes = 0;
  double removal = 0.3;
  std::string coins_path;
  std::string coin_family = "grover";
  std::string init = "uniform";
  int steps = 10;
  std::string mode = "walkless";
  int spacing = 2;
  std::string out_dir;
  bool svg = false;
  bool trajectory = false;
  std::uint64_t seed = 1;
  // cost
  int nodes = 4;
  bool json_only = false;
};

void add_walk_options(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--graph", cfg.graph_path, "graph JSON file");
  cmd->add_option("--random-graph", cfg.random_nodes,
                  "use a seeded random graph on N nodes instead of --graph");
  cmd->add_option("--removal", cfg.removal,
                  "edge fraction removed from the random graph")
      ->check(CLI::Range(0.0, 1.0));
  auto *coins = cmd->add_option("--coins", cfg.coins_path, "coin spec JSON file");
  cmd->add_option("--coin-family", cfg.coin_family,
                  "hadamard | grover | dft (when no --coins)")
      ->excludes(coins);
  cmd->add_option("--init", cfg.init, "\"localized:j,k\" or \"uniform\"");
  cmd->add_option("--steps", cfg.steps, "number of walk steps")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--spacing", cfg.spacing, "lattice key-site spacing")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "seed for random fixtures");
}

Graph load_graph(const RunConfig &cfg) {
  if (!cfg.graph_path.empty()) return parse_graph(read_text_file(cfg.graph_path));
  if (cfg.random_nodes > 0) {
    Rng rng(cfg.seed);
    return random_graph(cfg.random_nodes, cfg.removal, rng);
  }
  throw Error(ErrorCode::ValidationError, "either --graph or --random-graph is required");
}

CoinSpec load_coin_spec(const RunConfig &cfg) {
  if (!cfg.coins_path.empty()) return parse_coin_spec(read_text_file(cfg.coins_path));
  CoinSpec spec;
  spec.base.family = coin_family_from_string(cfg.coin_family);
  if (spec.base.family == CoinFamily::Custom) {
    throw Error(ErrorCode::ValidationError, "custom coins need a --coins file");
  }
  return spec;
}

StateSpace initial_state(const RunConfig &cfg, const Graph &g) {
  if (cfg.init == "uniform") return uniform_state(g);
  const std::string prefix = "localized:";
  if (cfg.init.rfind(prefix, 0) == 0) {
    const std::string rest = cfg.init.substr(prefix.size());
    const auto comma = rest.find(',');
    try {
      if (comma != std::string::npos) {
        std::size_t used_j = 0, used_k = 0;
        const int j = std::stoi(rest.substr(0, comma), &used_j);
        const int k = std::stoi(rest.substr(comma + 1), &used_k);
        if (used_j == comma && used_k == rest.size() - comma - 1) {
          return localized_state(g.n_nodes(), j, k);
        }
      }
    } catch (const std::logic_error &) {
    }
  }
  throw Error(ErrorCode::ValidationError,
              "--init must be \"uniform\" or \"localized:j,k\", got '" + cfg.init + "'");
}

WalkRun make_walk(const RunConfig &cfg) {
  Graph g = load_graph(cfg);
  CoinSet coins = build_coin_set(g, load_coin_spec(cfg));
  StateSpace init = initial_state(cfg, g);
  WalkRun walk{g, std::move(coins), std::move(init)};
  walk.n_steps = cfg.steps;
  walk.mode = walk_mode_from_string(cfg.mode);
  walk.lattice.spacing = cfg.spacing;
  walk.lattice.n = g.n_nodes();
  return walk;
}

fs::path ensure_dir(const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create '" + dir + "': " + ec.message());
  return dir;
}

int cmd_run(const RunConfig &cfg, std::ostream &out) {
  WalkRun walk = make_walk(cfg);
  walk.record_trajectory = cfg.trajectory;
  const WalkResult result = run(walk);
  const fs::path dir = ensure_dir(cfg.out_dir);
  write_text_file(dir / "distribution.csv", distributions_to_csv(result.distributions));
  write_text_file(dir / "final_state.json", state_to_json(result.final_state));
  write_text_file(dir / "final_state.csv", state_to_csv(result.final_state));
  if (cfg.svg) {
    write_text_file(dir / "distribution.svg",
                    distribution_svg(result.distributions.back(),
                                     "node distribution after " +
                                         std::to_string(cfg.steps) + " steps (" +
                                         cfg.mode + ")"));
  }
  if (cfg.trajectory) {
    nlohmann::json traj = nlohmann::json::array();
    for (const StateSpace &s : result.trajectory) {
      traj.push_back(nlohmann::json::parse(state_to_json(s)));
    }
    write_text_file(dir / "trajectory.json", traj.dump(1) + "\n");
  }
  out << "mode " << cfg.mode << ", N = " << walk.graph.n_nodes() << ", "
      << cfg.steps << " steps\n";
  out << "coin applications " << result.ops.coin_applications
      << ", transpositions " << result.ops.transpositions << "\n";
  out << std::setprecision(12) << "final distribution:";
  for (double p : result.distributions.back().probs) out << " " << p;
  out << "\nwrote " << dir.string() << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const WalkRun walk = make_walk(cfg);
  struct Pair {
    WalkMode a, b;
    double tol;
  };
  const Pair pairs[] = {
      {WalkMode::Explicit, WalkMode::Walkless, 1e-10},
      {WalkMode::Walkless, WalkMode::Compiled, 1e-10},
      {WalkMode::Compiled, WalkMode::Lattice, 1e-9},
  };
  out << "N = " << walk.graph.n_nodes() << ", " << walk.n_steps << " steps, "
      << walk.graph.edges().size() << " edges\n";
  std::optional<std::string> first_failure;
  for (const Pair &p : pairs) {
    WalkRun w = walk;
    const std::vector<double> dev = compare_modes(w, p.a, p.b);
    double worst = 0.0;
    for (double d : dev) worst = std::max(worst, d);
    const bool ok = worst <= p.tol;
    const std::string name = to_string(p.a) + " <-> " + to_string(p.b);
    out << std::left << std::setw(24) << name << " max deviation "
        << std::scientific << std::setprecision(3) << worst << " (tol " << p.tol
        << ") " << (ok ? "PASS" : "FAIL") << std::defaultfloat << "\n";
    if (!ok && !first_failure) first_failure = name;
  }
  if (first_failure) {
    err << "error: EquivalenceViolation: " << *first_failure
        << " exceeded its tolerance\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_compile(const RunConfig &cfg, std::ostream &out) {
  const Graph g = load_graph(cfg);
  const CoinSet coins = build_coin_set(g, load_coin_spec(cfg));
  const CompiledCoins compiled = compile_coin_set(coins);
  const CostReport cost = cost_report(g.n_nodes(), 1);
  const fs::path dir = ensure_dir(cfg.out_dir);

  nlohmann::ordered_json summary;
  summary["n"] = g.n_nodes();
  std::vector<int> intervals;
  for (const Stage &s : compiled.schedules.front().stages) intervals.push_back(s.interval);
  summary["intervals"] = intervals;
  summary["walkless_stages_per_step"] = cost.walkless_stages_per_step;
  nlohmann::json nodes = nlohmann::json::array();
  for (int j = 1; j <= g.n_nodes(); ++j) {
    const PulseSchedule &s = compiled.schedules[j - 1];
    std::size_t rotations = 0;
    for (const Stage &st : s.stages) rotations += st.rotations.size();
    nodes.push_back({{"node", j},
                     {"factors", compiled.programs[j - 1].factors.size()},
                     {"stages", s.stages.size()},
                     {"rotations", rotations}});
    write_text_file(dir / ("program_node" + std::to_string(j) + ".json"),
                    program_to_json(compiled.programs[j - 1]));
    write_text_file(dir / ("schedule_node" + std::to_string(j) + ".json"),
                    schedule_to_json(s));
  }
  summary["nodes"] = std::move(nodes);
  write_text_file(dir / "summary.json", summary.dump(1) + "\n");

  out << "N = " << g.n_nodes() << ": " << compiled.schedules.front().stages.size()
      << " stages per coin, intervals (";
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    out << (i ? "," : "") << intervals[i];
  }
  out << ")\nwrote " << dir.string() << "\n";
  return kExitOk;
}

int cmd_cost(const RunConfig &cfg, std::ostream &out) {
  const CostReport r = cost_report(cfg.nodes, cfg.steps);
  if (cfg.json_only) {
    out << cost_report_json(r) << "\n";
  } else {
    out << cost_report_table(r);
  }
  if (!cfg.out_dir.empty()) {
    write_text_file(ensure_dir(cfg.out_dir) / "cost.json", cost_report_json(r) + "\n");
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Coined quantum walks without translation: simulate, verify, "
               "compile coins to pulse schedules"};
  app.name("qwalk");
  app.require_subcommand(1);
  RunConfig cfg;

  auto *run_cmd = app.add_subcommand("run", "evolve a walk and write its distributions");
  add_walk_options(run_cmd, cfg);
  run_cmd->add_option("--mode", cfg.mode, "explicit | walkless | compiled | lattice");
  run_cmd->add_option("--out", cfg.out_dir, "output directory")->required();
  run_cmd->add_flag("--svg", cfg.svg, "write a bar chart of the final distribution");
  run_cmd->add_flag("--trajectory", cfg.trajectory, "write every step's state");

  auto *verify_cmd = app.add_subcommand("verify", "check that all walk modes agree");
  add_walk_options(verify_cmd, cfg);

  auto *compile_cmd = app.add_subcommand("compile", "write per-node programs and schedules");
  add_walk_options(compile_cmd, cfg);
  compile_cmd->add_option("--out", cfg.out_dir, "output directory")->required();

  auto *cost_cmd = app.add_subcommand("cost", "compare walkless and circuit stage counts");
  cost_cmd->add_option("--nodes,-n", cfg.nodes, "walk dimension N")->required();
  cost_cmd->add_option("--steps", cfg.steps, "number of walk steps")
      ->check(CLI::NonNegativeNumber);
  cost_cmd->add_option("--out", cfg.out_dir, "also write cost.json here");
  cost_cmd->add_flag("--json", cfg.json_only, "print JSON instead of a table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*run_cmd) return cmd_run(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out, err);
    if (*compile_cmd) return cmd_compile(cfg, out);
    if (*cost_cmd) return cmd_cost(cfg, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return is_numerical(e.code()) ? kExitNumerical : kExitInput;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace qwalk::cli
