#pragma once

#include "core/game.hpp"
#include "core/oracle.hpp"
#include "core/solver_core.hpp"

namespace aug {

// Alg. 1: solve the parity game on (V, E \ Ec), peel the P1 attractor of its
// P1 region, recurse on the rest. Exact regions and memoryless P0 strategy.
SolveResult solve_colive(const AugmentedGame& game);

// attr_pers as a public operation on an augmented reachability game.
SolveResult solve_attr_pers(const AugmentedGame& game);

// Zielonka with AttrPers in place of the Player-0 attractor.
SolveResult zielonka_pers(const GameGraph& g, const std::vector<int>& priority,
                          const std::vector<PersistentLiveGroup>& groups);

struct QSolveResult {
  SolveResult result;
  long long calls = 0;
  int n = 0, h = 0, l = 0;
  double bound() const;
};

// Bounded-precision solver for parity games with persistent live groups.
// Self-loops are split internally and results projected back.
QSolveResult qsolve_pers(const GameGraph& g, const std::vector<int>& priority,
                         const std::vector<PersistentLiveGroup>& groups);

enum class Algo {
  Auto,
  Zielonka,
  Parys,
  Colive,
  AttrPers,
  ZielonkaPers,
  QSolvePers,
  Oracle,
  RabinOracle,
};

std::optional<Algo> algo_from_name(const std::string& name);
const char* algo_name(Algo a);

struct SolveOptions {
  Algo algo = Algo::Auto;
  bool want_witness = false;
  OracleLimits limits;
  int jobs = 1;
};

struct DispatchResult {
  SolveResult result;
  std::string pipeline;       // which solver chain ran
  long long qsolve_calls = -1;  // recursion counter when a QSolve ran
  int qsolve_n = 0, qsolve_h = 0, qsolve_l = 0;
};

// Dispatcher over the assumption classes. `auto` picks: plain objectives go
// to the classic solvers, co-live to Alg. 1, persistent groups to
// attr_pers/qsolve_pers, and the live-edge family runs its reduction chain
// into the Rabin-encoded game decided by the oracle.
DispatchResult solve_augmented(const AugmentedGame& game, const SolveOptions& opts = {});

}  // namespace aug
