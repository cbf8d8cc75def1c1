#pragma once

#include "core/attractor.hpp"
#include "core/game.hpp"

namespace aug {

// W0 = attr_0(T), strategy = attractor strategy (targets get a default move).
SolveResult solve_reachability(const GameGraph& g, const std::vector<Vertex>& targets);

struct RegionStrategy {
  Mask win;
  std::vector<Vertex> strat;  // per vertex, -1 where undefined
};

// Winning region and strategy for Phi = <>A \/ []S, computed on the safety
// game that merges A into a sink: W = V \ attr_1(G', V' \ S'). `alive` and
// `edge_ok` carve the subgame. Vertices of A are absorbing.
RegionStrategy reach_or_safe_region(const GameGraph& g, const std::vector<char>& reach_set,
                                    const std::vector<char>& safe_set, const Mask* alive = nullptr,
                                    const std::vector<char>* edge_ok = nullptr);

SolveResult solve_reach_or_safe(const GameGraph& g, const std::vector<Vertex>& reach,
                                const std::vector<Vertex>& safe);

SolveResult solve_parity_zielonka(const GameGraph& g, const std::vector<int>& priority);

struct ParysResult {
  SolveResult result;
  long long calls = 0;  // nontrivial QSolve executions
  int n = 0, h = 0, l = 0;
  // Recursion-count bound from the precision analysis: n^l * (h+l)^l.
  double bound() const;
};

// Bounded-precision parity solver; rejects self-loops (split them first).
ParysResult solve_parity_parys(const GameGraph& g, const std::vector<int>& priority);

}  // namespace aug
