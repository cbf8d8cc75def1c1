#pragma once

#include "core/game.hpp"
#include "core/io.hpp"
#include "core/profile.hpp"

namespace aug {

struct OracleLimits {
  int max_edges = 18;                  // profile-enumeration bound
  long long max_strategies = 1000000;  // positional-strategy product bound
};

// Ground truth at desk scale: a vertex is won by Player 0 iff some positional
// strategy admits no reachable P1-winning tail signature in the restricted
// graph. Returns one uniform witnessing strategy on W0 and, when requested, a
// lasso counterexample per losing vertex. The objective must be Parity or
// Rabin (convert reachability first).
SolveResult oracle_solve(const AugmentedGame& game, const OracleLimits& limits = {},
                         bool want_witnesses = true, int jobs = 1);

struct VerifyOutcome {
  bool ok = false;
  std::optional<LassoWitness> counterexample;
  std::optional<Vertex> failed_vertex;
};

// Accepts iff no reachable realizable inf-set in the strategy-restricted
// graph classifies as P1-winning. The strategy must cover every
// claim-reachable Player-0 vertex.
VerifyOutcome verify_strategy(const AugmentedGame& game, const std::map<Vertex, Vertex>& strat,
                              const std::vector<Vertex>& claim);

// Exhaustive assignment check, at most 20 variables.
bool sat_brute(const CnfFormula& formula);

}  // namespace aug
