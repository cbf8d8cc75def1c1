#pragma once

#include "core/game.hpp"

namespace aug {

struct EnumerateLimits {
  int max_edges = 18;
};

// Throws unless (I, F) is a realizable tail signature: F nonempty, every
// F-edge has both endpoints in I, I is exactly the endpoint set of F, every
// vertex of I has an outgoing F-edge, and (I, F) is strongly connected.
void check_profile(const GameGraph& g, const InfSetProfile& p);
bool profile_realizable(const GameGraph& g, const InfSetProfile& p);

// Winner of any play whose tail signature is `p`, i.e. 0 iff (not psi) or Phi.
// The objective must be Parity or Rabin.
int classify_infset(const InfSetProfile& p, const AugmentedGame& game);

// All realizable profiles (I, F) with I reachable from `start`, in ascending
// edge-bitmask order. Rejects graphs above the configured edge bound.
std::vector<InfSetProfile> enumerate_infsets(const GameGraph& g, Vertex start,
                                             const EnumerateLimits& limits = {});

InfSetProfile profile_of_lasso(const GameGraph& g, const std::vector<Vertex>& stem,
                               const std::vector<Vertex>& cycle);

// ---- P1 profile search -----------------------------------------------------
//
// Decides, over a graph whose edges are filtered by `edge_ok`, whether some
// realizable profile reachable from a start vertex classifies as P1-winning.
// Works by SCC decomposition with iterative removal of vertices that no
// P1-good profile can contain, so it runs in polynomial time and scales past
// the enumeration bound.

struct SearchContext {
  const AugmentedGame& game;        // Parity or Rabin objective
  std::vector<char> edge_ok;        // per edge of game.graph
};

// Vertices from which P1 wins against the fixed edge filter: either a
// P1-good profile is reachable, or a Player-0 dead-end is reachable.
std::vector<char> p1_winning_from(const SearchContext& ctx);

// First (deterministic) P1-good profile reachable from `start`, if any.
std::optional<InfSetProfile> find_p1_profile(const SearchContext& ctx, Vertex start);

// Lasso realizing `p` from `start` inside the filtered graph: stem from start
// to the profile, cycle covering exactly the profile's edges.
LassoWitness lasso_of_profile(const GameGraph& g, const std::vector<char>& edge_ok, Vertex start,
                              const InfSetProfile& p);

}  // namespace aug
