#pragma once

#include "core/game.hpp"

namespace aug {

// Subgame views are vertex masks over the original graph; edge and vertex ids
// stay stable across restrictions.
using Mask = std::vector<char>;

Mask full_mask(const GameGraph& g);
std::vector<Vertex> mask_vertices(const Mask& m);

// { u | (u,v) in E, v in T }
std::vector<Vertex> pre(const GameGraph& g, const std::vector<Vertex>& targets);

struct Attr {
  Mask in;                     // attractor membership
  std::vector<Vertex> strat;   // per vertex: successor decreasing distance, or -1
};

// Least fixpoint of: T in A; player vertex joins when some edge enters A;
// opponent vertex joins when all its (alive) edges enter A. An opponent
// dead-end joins vacuously, which realizes the "dead-end loses for its owner"
// convention. Tie-breaking: lowest declaration-order target edge.
Attr attractor(const GameGraph& g, int player, const std::vector<Vertex>& targets,
               const Mask* alive = nullptr, const std::vector<char>* edge_ok = nullptr);

// G|_U: vertex set U, edges E ∩ U×U, ownership inherited. The result is
// flagged to permit dead-ends.
GameGraph restrict_graph(const GameGraph& g, const std::vector<Vertex>& keep);

// G|_C: keeps edge (u,v) iff (u,v) in C or u not in src(C).
GameGraph restrict_control(const GameGraph& g, const std::vector<EdgeId>& committed);

// Mask analogue of restrict_control: returns the per-edge keep set.
std::vector<char> control_edge_mask(const GameGraph& g, const std::vector<EdgeId>& committed);

// Persistent live groups restricted to U:
//   T|U = T ∩ U
//   C|U = C ∩ (U×U)
//   S|U = (S ∩ U) \ (src(C) \ src(C|U))
std::vector<PersistentLiveGroup> restrict_pers(const std::vector<PersistentLiveGroup>& groups,
                                               const GameGraph& g, const Mask& keep);
std::vector<PersistentLiveGroup> restrict_pers(const std::vector<PersistentLiveGroup>& groups,
                                               const GameGraph& g,
                                               const std::vector<Vertex>& keep);

// Rebuilds a restricted game's assumption in the id space of the restricted
// graph produced by restrict_graph(g, keep).
Assumption restrict_assumption(const Assumption& a, const GameGraph& g,
                               const std::vector<Vertex>& keep, const GameGraph& restricted);

}  // namespace aug
