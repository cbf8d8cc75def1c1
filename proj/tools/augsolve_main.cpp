// Command-line front end; links exclusively against the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "augsolve.h"

namespace {

constexpr int kExitP0 = 0;
constexpr int kExitP1 = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

int exit_code_of(aug_status st) {
  switch (st) {
    case AUG_OK: return kExitP0;
    case AUG_ERR_BOUND: return kExitBound;
    default: return kExitUsage;
  }
}

[[noreturn]] void die(aug_status st) {
  std::cerr << "augsolve: " << aug_last_error() << "\n";
  std::exit(exit_code_of(st));
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "augsolve: cannot open " << path << "\n";
    std::exit(kExitUsage);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "augsolve: cannot write " << path << "\n";
    std::exit(kExitUsage);
  }
  out << text;
}

struct GameHandle {
  aug_game* game = nullptr;
  ~GameHandle() { aug_game_free(game); }
};

struct ResultHandle {
  aug_result* result = nullptr;
  ~ResultHandle() { aug_result_free(result); }
};

struct CString {
  char* s = nullptr;
  ~CString() { aug_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

void parse_or_die(const std::string& text, bool allow_p0, GameHandle& out) {
  aug_parse_options po{allow_p0 ? 1 : 0};
  if (aug_status st = aug_game_parse(text.c_str(), &po, &out.game); st != AUG_OK) die(st);
}

struct SolveFlags {
  std::string algo = "auto";
  bool witness = false;
  bool allow_p0 = false;
  int max_edges = 0;
  long long max_strategies = 0;
  int jobs = 0;

  void attach(CLI::App* cmd, bool with_algo = true) {
    if (with_algo)
      cmd->add_option("--algo", algo,
                      "auto|zielonka|parys|colive|attr-pers|zielonka-pers|qsolve-pers|oracle|"
                      "rabin-oracle");
    cmd->add_flag("--witness", witness, "emit a lasso counterexample per lost vertex");
    cmd->add_flag("--allow-p0-assumption-edges", allow_p0,
                  "accept assumption edges owned by Player 0");
    cmd->add_option("--oracle-max-edges", max_edges, "profile-enumeration bound (default 18)");
    cmd->add_option("--oracle-max-strategies", max_strategies,
                    "positional-strategy bound (default 1000000)");
    cmd->add_option("--jobs", jobs, "parallel strategy scan in the oracle");
  }

  aug_solve_options options() const {
    aug_solve_options so{};
    so.algo = algo.c_str();
    so.want_witness = witness ? 1 : 0;
    so.oracle_max_edges = max_edges;
    so.oracle_max_strategies = max_strategies;
    so.jobs = jobs;
    return so;
  }
};

int run_solve(const std::string& file, const SolveFlags& flags, const std::string& from,
              const std::string& strategy_out) {
  GameHandle game;
  parse_or_die(read_input(file), flags.allow_p0, game);
  ResultHandle result;
  aug_solve_options so = flags.options();
  if (aug_status st = aug_solve(game.game, &so, &result.result); st != AUG_OK) die(st);

  CString text;
  if (aug_status st = aug_result_serialize(result.result, &text.s); st != AUG_OK) die(st);
  std::cout << text.str();

  if (!strategy_out.empty()) {
    std::string strategies;
    std::istringstream in(text.str());
    std::string line;
    while (std::getline(in, line))
      if (line.rfind("strategy ", 0) == 0) strategies += line + "\n";
    write_output(strategy_out, strategies);
  }

  if (!from.empty()) {
    int winner = 0;
    if (aug_status st = aug_result_winner(result.result, from.c_str(), &winner); st != AUG_OK)
      die(st);
    return winner == 0 ? kExitP0 : kExitP1;
  }
  return kExitP0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver for two-player games under progress assumptions"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve a game file ('-' reads stdin)");
  std::string solve_file, solve_from, solve_strategy_out;
  SolveFlags solve_flags;
  solve->add_option("file", solve_file)->required();
  solve->add_option("--from", solve_from, "query vertex deciding the exit code");
  solve->add_option("--strategy-out", solve_strategy_out, "write strategy lines to a file");
  solve_flags.attach(solve);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "solve via the exhaustive oracle");
  std::string oracle_file, oracle_from;
  SolveFlags oracle_flags;
  oracle->add_option("file", oracle_file)->required();
  oracle->add_option("--from", oracle_from, "query vertex deciding the exit code");
  oracle_flags.attach(oracle, false);
  oracle_flags.algo = "oracle";

  // reduce
  auto* reduce = app.add_subcommand("reduce", "apply a reduction and print the game");
  std::string reduce_file, reduce_to, reduce_out;
  bool reduce_allow_p0 = false;
  reduce->add_option("file", reduce_file)->required();
  reduce->add_option("--to", reduce_to, "rabin|parity|live-edges|live-groups")->required();
  reduce->add_option("--out", reduce_out, "output file (default stdout)");
  reduce->add_flag("--allow-p0-assumption-edges", reduce_allow_p0);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a game");
  std::string gen_3sat, gen_assumption = "none", gen_out;
  bool gen_random = false;
  int gen_vertices = 6, gen_edges = 12;
  unsigned long long gen_seed = 1;
  gen->add_option("--3sat", gen_3sat, "DIMACS CNF file to turn into a live-group game");
  gen->add_flag("--random", gen_random, "generate a seeded random game");
  gen->add_option("--vertices", gen_vertices);
  gen->add_option("--edges", gen_edges);
  gen->add_option("--assumption", gen_assumption, "none|live|colive|group|pers|cnf");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // product
  auto* prod = app.add_subcommand("product", "synchronized product of two labeled games");
  std::string prod_spec, prod_plant, prod_out;
  prod->add_option("spec", prod_spec)->required();
  prod->add_option("plant", prod_plant)->required();
  prod->add_option("--out", prod_out);

  // decompose
  auto* dec = app.add_subcommand("decompose", "split a live-group game into spec and hub");
  std::string dec_file, dec_spec_out, dec_plant_out;
  dec->add_option("file", dec_file)->required();
  dec->add_option("--out-spec", dec_spec_out, "spec side output (default stdout)");
  dec->add_option("--out-plant", dec_plant_out, "hub side output (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a strategy certificate");
  std::string verify_file, verify_strategy;
  std::vector<std::string> verify_claim;
  bool verify_allow_p0 = false;
  verify->add_option("file", verify_file)->required();
  verify->add_option("--strategy", verify_strategy, "file with 'strategy U -> V' lines")
      ->required();
  verify->add_option("--claim", verify_claim, "vertices the strategy claims to win")
      ->required();
  verify->add_flag("--allow-p0-assumption-edges", verify_allow_p0);

  // stats
  auto* stats = app.add_subcommand("stats", "solve and print pipeline/recursion counters");
  std::string stats_file;
  SolveFlags stats_flags;
  stats->add_option("file", stats_file)->required();
  stats_flags.attach(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (solve->parsed()) return run_solve(solve_file, solve_flags, solve_from, solve_strategy_out);

  if (oracle->parsed()) {
    oracle_flags.algo = "oracle";
    return run_solve(oracle_file, oracle_flags, oracle_from, "");
  }

  if (reduce->parsed()) {
    GameHandle game;
    parse_or_die(read_input(reduce_file), reduce_allow_p0, game);
    GameHandle reduced;
    if (aug_status st = aug_game_reduce(game.game, reduce_to.c_str(), &reduced.game);
        st != AUG_OK)
      die(st);
    CString text;
    if (aug_status st = aug_game_serialize(reduced.game, &text.s); st != AUG_OK) die(st);
    write_output(reduce_out, text.str());
    return kExitP0;
  }

  if (gen->parsed()) {
    GameHandle game;
    if (!gen_3sat.empty() && gen_random) {
      std::cerr << "augsolve: choose one of --3sat and --random\n";
      return kExitUsage;
    }
    if (!gen_3sat.empty()) {
      if (aug_status st = aug_game_from_dimacs(read_input(gen_3sat).c_str(), &game.game);
          st != AUG_OK)
        die(st);
    } else if (gen_random) {
      if (aug_status st = aug_game_random(gen_vertices, gen_edges, gen_assumption.c_str(),
                                          gen_seed, &game.game);
          st != AUG_OK)
        die(st);
    } else {
      std::cerr << "augsolve: gen needs --3sat or --random\n";
      return kExitUsage;
    }
    CString text;
    if (aug_status st = aug_game_serialize(game.game, &text.s); st != AUG_OK) die(st);
    write_output(gen_out, text.str());
    return kExitP0;
  }

  if (prod->parsed()) {
    GameHandle spec, plant, result;
    parse_or_die(read_input(prod_spec), false, spec);
    parse_or_die(read_input(prod_plant), false, plant);
    if (aug_status st = aug_game_product(spec.game, plant.game, &result.game); st != AUG_OK)
      die(st);
    CString text;
    if (aug_status st = aug_game_serialize(result.game, &text.s); st != AUG_OK) die(st);
    write_output(prod_out, text.str());
    return kExitP0;
  }

  if (dec->parsed()) {
    GameHandle game, spec, plant;
    parse_or_die(read_input(dec_file), false, game);
    if (aug_status st = aug_game_decompose(game.game, &spec.game, &plant.game); st != AUG_OK)
      die(st);
    CString spec_text, plant_text;
    if (aug_status st = aug_game_serialize(spec.game, &spec_text.s); st != AUG_OK) die(st);
    if (aug_status st = aug_game_serialize(plant.game, &plant_text.s); st != AUG_OK) die(st);
    if (dec_spec_out.empty() && dec_plant_out.empty()) {
      std::cout << spec_text.str() << "# ---\n" << plant_text.str();
    } else {
      write_output(dec_spec_out, spec_text.str());
      write_output(dec_plant_out, plant_text.str());
    }
    return kExitP0;
  }

  if (verify->parsed()) {
    GameHandle game;
    parse_or_die(read_input(verify_file), verify_allow_p0, game);
    std::string strategy_text = read_input(verify_strategy);
    std::vector<const char*> claims;
    for (const auto& c : verify_claim) claims.push_back(c.c_str());
    int verdict = 0;
    CString counterexample;
    if (aug_status st = aug_verify(game.game, strategy_text.c_str(), claims.data(),
                                   claims.size(), &verdict, &counterexample.s);
        st != AUG_OK)
      die(st);
    if (verdict) {
      std::cout << "ok\n";
      return kExitP0;
    }
    std::cout << counterexample.str();
    return kExitP1;
  }

  if (stats->parsed()) {
    GameHandle game;
    parse_or_die(read_input(stats_file), stats_flags.allow_p0, game);
    ResultHandle result;
    aug_solve_options so = stats_flags.options();
    if (aug_status st = aug_solve(game.game, &so, &result.result); st != AUG_OK) die(st);
    CString text;
    if (aug_status st = aug_result_stats(result.result, &text.s); st != AUG_OK) die(st);
    std::cout << text.str();
    return kExitP0;
  }

  return kExitUsage;
}
