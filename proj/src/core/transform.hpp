#pragma once

#include "core/game.hpp"

namespace aug {

// Reachability-to-parity conversion: target vertices become priority-2 sinks
// (outgoing edges dropped, self-loop added), all others get priority 1.
// Assumption elements whose source edge vanished are pruned; a CNF clause
// losing all literals becomes the constant false for its vertex.
AugmentedGame reach_to_parity(const AugmentedGame& game);

// Returns a parity game ready for the oracle/classifier: Reach objectives are
// converted, Parity/Rabin games pass through unchanged.
AugmentedGame to_tail_objective(const AugmentedGame& game);

struct SplitResult {
  GameGraph graph;
  std::vector<int> priority;
  std::vector<PersistentLiveGroup> persistent;
  std::vector<Vertex> back;  // per new vertex: original vertex, or -1 for fresh relays
};

// Replaces each self-loop (u,u) by u -> u_e -> u with a fresh priority-0
// vertex owned by u's opponent. A loop in some C is replaced by (u, u_e)
// there; u_e inherits membership of u in S and T so that looping plays keep
// their violation status.
SplitResult split_self_loops(const GameGraph& g, const std::vector<int>& priority,
                             const std::vector<PersistentLiveGroup>& persistent);

}  // namespace aug
