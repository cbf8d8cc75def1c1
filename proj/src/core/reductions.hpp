#pragma once

#include "core/game.hpp"
#include "core/io.hpp"

namespace aug {

struct RabinReduction {
  AugmentedGame game;             // Rabin objective, no assumption
  std::vector<Vertex> back;       // per new vertex: original vertex or -1
  std::vector<Vertex> edge_vertex;  // per original edge: its vertex in the new game
  size_t assumption_pairs = 0;    // |Omega_1|
  size_t parity_pairs = 0;        // |Omega_2|
};

// Rabin encoding over V ⊎ E: one vertex per edge, live-group pairs
// (src(H), H), co-live pairs ({e}, {}), live edges as singleton groups,
// parity pairs (P_2i, U_{j>2i} P_j). Parity objective required; persistent
// groups are rejected.
RabinReduction to_rabin(const AugmentedGame& game);

struct GadgetReduction {
  AugmentedGame game;
  std::vector<Vertex> back;  // per new vertex: original vertex or -1
};

// Replaces each singleton-source live group H at vertex a by a fresh
// environment vertex a_H: one live edge (a, a_H) plus normal edges to the
// group's targets. Every group must have a single source.
GadgetReduction singleton_groups_to_live_edges(const AugmentedGame& game);

// Live CNF groups become one gadget vertex per clause with a live edge from
// the clause's vertex; original edges are kept.
GadgetReduction cnf_to_live_edges(const AugmentedGame& game);

// 3-SAT to an augmented reachability game with live groups (the clause /
// literal / primed-literal arena). P0 wins the hub iff the formula is
// satisfiable. Clauses must have 1..3 literals (shorter ones behave as if
// padded by repetition).
AugmentedGame sat_to_game(const CnfFormula& formula);

// Inserts an opponent-owned relay on every ownership-violating edge;
// assumption edges remap onto the first half of each split edge.
GadgetReduction make_alternating(const AugmentedGame& game);

struct ProductInput {
  LabeledGameGraph graph;
  std::optional<Objective> objective;   // spec side
  std::vector<EdgeId> live_edges;       // plant side
};

struct ProductResult {
  AugmentedGame game;  // live-group assumption, init set
  std::vector<std::pair<Vertex, Vertex>> back;  // per product vertex
};

// Synchronized product of an alternating labeled game (objective side) with an
// alternating labeled graph annotated with live edges: one live group per
// plant live edge, objective lifted through the first projection, restricted
// to pairs reachable from the initial pair.
ProductResult product(const ProductInput& spec, const ProductInput& plant);

struct DecomposeResult {
  LabeledGameGraph spec_graph;
  Objective spec_objective;
  LabeledGameGraph plant_graph;
  std::vector<EdgeId> plant_live_edges;
  std::vector<Vertex> spec_back;  // per spec vertex: original vertex or -1 (pre-split relays)
};

// Inverse direction: labels group edges h_i (groups made edge-disjoint by
// relay splitting if needed) and emits the (m+2)-vertex hub with m live
// edges whose product with the labeled game is play-equivalent to the input.
DecomposeResult decompose(const AugmentedGame& game);

}  // namespace aug
