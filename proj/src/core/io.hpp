#pragma once

#include "core/game.hpp"

namespace aug {

// A parsed game document. Plain augmented games carry an objective and no
// labels; labeled game graphs (product/decompose inputs) carry labels, an
// initial vertex, and optionally an objective on top.
struct GameDoc {
  std::string name = "game";
  GameGraph graph;
  std::optional<Objective> objective;
  Assumption assumption;
  std::optional<Vertex> init;
  std::vector<std::string> alphabet;          // declaration order of first use
  std::vector<std::optional<int>> edge_label; // per edge
  std::vector<std::optional<int>> vertex_priority;

  bool labeled() const;
};

struct ParseOptions {
  bool allow_p0_assumption_edges = false;
};

GameDoc parse_game(const std::string& text, const ParseOptions& opts = {});

AugmentedGame to_augmented(const GameDoc& doc);
LabeledGameGraph to_labeled(const GameDoc& doc);
GameDoc doc_of_augmented(const AugmentedGame& game);
GameDoc doc_of_labeled(const LabeledGameGraph& lg, const std::optional<Objective>& objective,
                       const Assumption& assumption, const std::string& name);

// Canonical serialization: declaration order, stable bytes.
std::string serialize_game(const GameDoc& doc);

// Result format: `winner <v> <0|1>` per vertex, then `strategy <u> -> <v>`
// lines, then optional `witness <v> stem ... cycle ...` lines.
std::string serialize_result(const GameGraph& g, const SolveResult& result);

// Reads `strategy u -> v` lines; other result lines are ignored.
std::map<Vertex, Vertex> parse_strategy(const GameGraph& g, const std::string& text);

struct CnfFormula {
  int vars = 0;
  std::vector<std::vector<int>> clauses;  // DIMACS literals, +v / -v
};

CnfFormula parse_dimacs(const std::string& text);

}  // namespace aug
