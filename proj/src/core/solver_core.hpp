#pragma once

#include "core/attractor.hpp"
#include "core/game.hpp"

// Shared solver internals: the Zielonka recursion (optionally with persistent
// live groups) and the bounded-precision QSolve core. Declared here so both
// the classic and augmented frontends can drive them.

namespace aug {

struct ZielonkaOut {
  Mask w0;
  std::vector<Vertex> strat0;  // per vertex, -1 where undefined
};

// Zielonka with Player-0 attractors replaced by attr_pers when `groups` is
// nonempty; persistent groups are re-restricted on every subgame. Handles
// dead-ends by peeling both players' stranding regions first. `edge_ok`
// filters edges (used by the co-live solver) and requires empty `groups`.
ZielonkaOut zielonka_core(const GameGraph& g, const std::vector<int>& priority,
                          const std::vector<PersistentLiveGroup>& groups, Mask alive,
                          const std::vector<char>* edge_ok = nullptr);

// One call tree of QSolve_i; returns the surviving vertex set and counts
// nontrivial executions. Requires a total, self-loop-free subgame.
Mask qsolve_region_core(const GameGraph& g, const std::vector<int>& priority,
                        const std::vector<PersistentLiveGroup>& groups, Mask alive, int player,
                        int h, long long p_self, long long p_opp, long long& calls);

// Alg. 2: winning region and memoryless strategy of (G, <>T, psi_pers).
Attr attr_pers(const GameGraph& g, const std::vector<Vertex>& targets,
               const std::vector<PersistentLiveGroup>& groups, const Mask* alive = nullptr);

}  // namespace aug
