#pragma once

#include <cstdint>

#include "core/game.hpp"

namespace aug {

struct RandomGameSpec {
  int vertices = 6;
  int edges = 12;            // upper bound; totality may add a few
  Assumption::Kind assumption = Assumption::Kind::None;
  bool parity = true;        // false: reachability objective
  int max_priority = 3;
  std::uint64_t seed = 1;
  bool alternating = false;  // force strictly alternating ownership
  bool no_self_loops = false;
};

// Deterministic generator: identical spec + seed give identical games.
AugmentedGame random_game(const RandomGameSpec& spec);

// Random lasso inside the vertex set `inside` (random walk until a repeat).
LassoWitness random_lasso(const GameGraph& g, const std::vector<Vertex>& inside,
                          std::uint64_t seed);

}  // namespace aug
