#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/augmented.hpp"
#include "core/classic.hpp"
#include "core/oracle.hpp"
#include "core/random_games.hpp"
#include "core/transform.hpp"
#include "core/reductions.hpp"
#include <chrono>
#include "support.hpp"

using namespace aug;
using namespace aug::test;

namespace {

OracleLimits kLoose{40, 4000000};

// Winner reference for any augmented game at desk scale.
std::vector<int> oracle_winners(const AugmentedGame& game) {
  return oracle_solve(to_tail_objective(game), kLoose, false).winner;
}

void check_strategy_wins(const AugmentedGame& game, const SolveResult& r) {
  AugmentedGame tail = to_tail_objective(game);
  std::map<Vertex, Vertex> strat;
  for (Vertex v = 0; v < game.graph.num_vertices(); ++v)
    if (r.winner[v] == 0 && game.graph.owner(v) == 0) {
      Vertex to = r.strategy[v];
      REQUIRE(to >= 0);
      if (game.objective.kind == Objective::Kind::Reach &&
          contains(game.objective.target, v))
        to = v;  // targets are sinks after conversion
      strat[v] = to;
    }
  std::vector<Vertex> claim = r.region(0);
  VerifyOutcome out = verify_strategy(tail, strat, claim);
  if (!out.ok) CAPTURE(serialize_game(doc_of_augmented(game)));
  CHECK(out.ok);
}

}  // namespace

TEST_CASE("reachability on the fixtures") {
  AugmentedGame game = fig2(false);
  SolveResult r = solve_reachability(game.graph, game.objective.target);
  CHECK(r.winner[game.graph.vertex("g")] == 0);
  CHECK(r.winner[game.graph.vertex("w")] == 1);
  CHECK(r.winner[game.graph.vertex("r")] == 1);

  SolveResult all = solve_reachability(game.graph, {0, 1, 2});
  for (Vertex v = 0; v < 3; ++v) CHECK(all.winner[v] == 0);

  AugmentedGame sat = sat_to_game(parse_dimacs(fixture_text("fig4.cnf")));
  SolveResult satr = solve_reachability(sat.graph, sat.objective.target);
  CHECK(satr.winner[sat.graph.vertex("v0")] == 1);  // no help without assumptions
}

TEST_CASE("reach-or-safe equals the oracle on its three-priority encoding") {
  for (int seed = 0; seed < 120; ++seed) {
    RandomGameSpec spec;
    spec.vertices = 6;
    spec.edges = 12;
    spec.seed = 4000 + seed;
    AugmentedGame game = random_game(spec);
    const GameGraph& g = game.graph;
    std::vector<Vertex> reach, safe;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if ((seed + v) % 3 == 0) reach.push_back(v);
      if ((seed + v) % 2 == 0) safe.push_back(v);
    }
    SolveResult fast = solve_reach_or_safe(g, reach, safe);

    // Encoding: reach targets become priority-2 sinks, vertices outside
    // safe become priority-1 sinks, the rest keeps priority 0.
    AugmentedGame enc;
    enc.graph = g;
    std::vector<int> prio(g.num_vertices(), 0);
    // rebuild edges: sink-ify encoded vertices
    GameGraph h;
    for (Vertex v = 0; v < g.num_vertices(); ++v) h.add_vertex(g.name(v), g.owner(v));
    std::vector<char> sink(g.num_vertices(), 0);
    for (Vertex v : reach) {
      sink[v] = 1;
      prio[v] = 2;
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (!contains(sorted_unique(safe), v) && !sink[v]) {
        sink[v] = 1;
        prio[v] = 1;
      }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (!sink[g.edge(e).first]) h.add_edge(g.edge(e).first, g.edge(e).second);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (sink[v]) h.add_edge(v, v);
    enc.graph = h;
    enc.objective = Objective::parity(prio);
    enc.assumption = Assumption::none();
    auto ref = oracle_solve(enc, kLoose, false).winner;
    for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(fast.winner[v] == ref[v]);
  }

  // Trivial shapes.
  const GameGraph& g = fig2(false).graph;
  std::vector<Vertex> everything{0, 1, 2};
  CHECK(solve_reach_or_safe(g, everything, {}).region(0) == everything);
  CHECK(solve_reach_or_safe(g, {}, everything).region(0) == everything);
}

TEST_CASE("zielonka and parys match the oracle on plain parity games") {
  int games = 0;
  for (int seed = 0; seed < 200; ++seed) {
    RandomGameSpec spec;
    spec.vertices = 3 + seed % 6;
    spec.edges = spec.vertices * 2;
    spec.max_priority = 4;
    spec.seed = 500 + seed;
    AugmentedGame game = random_game(spec);
    auto ref = oracle_winners(game);
    SolveResult z = solve_parity_zielonka(game.graph, game.objective.priority);
    CHECK(z.winner == ref);
    check_strategy_wins(game, z);

    SplitResult split = split_self_loops(game.graph, game.objective.priority, {});
    ParysResult p = solve_parity_parys(split.graph, split.priority);
    for (Vertex v = 0; v < game.graph.num_vertices(); ++v)
      CHECK(p.result.winner[v] == ref[v]);
    CHECK(static_cast<double>(p.calls) <= p.bound());
    ++games;
  }
  CHECK(games == 200);
}

TEST_CASE("parys trivia") {
  GameGraph g;
  g.add_vertex("a", 0);
  g.add_vertex("b", 1);
  g.add_edge("a", "b");
  g.add_edge("b", "a");
  ParysResult p = solve_parity_parys(g, {2, 0});
  CHECK(p.result.winner == std::vector<int>{0, 0});
  CHECK(p.calls <= 8);

  GameGraph loop;
  loop.add_vertex("a", 0);
  loop.add_edge("a", "a");
  CHECK_THROWS_WITH_AS(solve_parity_parys(loop, {0}), doctest::Contains("split_self_loops"),
                       Error);
}

TEST_CASE("solve_colive on the fixtures and against the oracle") {
  // fig2 with co-live (r,w): P1 must eventually stop refusing.
  AugmentedGame game = fig2(false);
  const GameGraph& g = game.graph;
  EdgeId rw = *g.find_edge(g.vertex("r"), g.vertex("w"));
  game.assumption = Assumption::colive_edges({rw});
  SolveResult r = solve_colive(game);
  for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(r.winner[v] == 0);
  check_strategy_wins(game, r);

  // Ec = {} degenerates to the plain parity solve.
  AugmentedGame parity = reach_to_parity(fig2(false));
  parity.assumption = Assumption::colive_edges({});
  SolveResult none = solve_colive(parity);
  SolveResult plain = solve_parity_zielonka(parity.graph, parity.objective.priority);
  CHECK(none.winner == plain.winner);

  int games = 0;
  for (int seed = 0; seed < 200; ++seed) {
    RandomGameSpec spec;
    spec.vertices = 3 + seed % 6;
    spec.edges = spec.vertices * 2;
    spec.max_priority = 4;
    spec.assumption = Assumption::Kind::CoLiveEdges;
    spec.seed = 7100 + seed;
    AugmentedGame rg = random_game(spec);
    SolveResult fast = solve_colive(rg);
    auto ref = oracle_winners(rg);
    if (fast.winner != ref) CAPTURE(serialize_game(doc_of_augmented(rg)));
    CHECK(fast.winner == ref);
    check_strategy_wins(rg, fast);
    ++games;
  }
  CHECK(games == 200);
}

TEST_CASE("attr_pers on pers1 and against the oracle") {
  AugmentedGame game = pers1();
  const GameGraph& g = game.graph;
  SolveResult r = solve_attr_pers(game);
  CHECK(r.region(0) == std::vector<Vertex>({0, 1, 2}));
  CHECK(r.strategy[g.vertex("s")] == g.vertex("q"));
  check_strategy_wins(game, r);

  // Empty groups degenerate to the plain attractor.
  Attr plain = attractor(g, 0, game.objective.target);
  Attr pers = attr_pers(g, game.objective.target, {});
  CHECK(plain.in == pers.in);

  int games = 0;
  for (int seed = 0; seed < 200; ++seed) {
    RandomGameSpec spec;
    spec.vertices = 3 + seed % 6;
    spec.edges = spec.vertices * 2;
    spec.assumption = Assumption::Kind::PersistentLiveGroups;
    spec.parity = false;
    spec.seed = 8200 + seed;
    AugmentedGame rg = random_game(spec);
    SolveResult fast = solve_attr_pers(rg);
    auto ref = oracle_winners(rg);
    if (fast.winner != ref) CAPTURE(serialize_game(doc_of_augmented(rg)));
    CHECK(fast.winner == ref);
    check_strategy_wins(rg, fast);
    ++games;
  }
  CHECK(games == 200);

  // Monotone in T, and T is always inside the region.
  for (int seed = 0; seed < 40; ++seed) {
    RandomGameSpec spec;
    spec.vertices = 6;
    spec.edges = 12;
    spec.assumption = Assumption::Kind::PersistentLiveGroups;
    spec.parity = false;
    spec.seed = 9300 + seed;
    AugmentedGame rg = random_game(spec);
    const auto& groups = rg.assumption.persistent;
    std::vector<Vertex> t1 = rg.objective.target;
    std::vector<Vertex> t2 = t1;
    t2.push_back(seed % rg.graph.num_vertices());
    t2 = sorted_unique(std::move(t2));
    Attr w1 = attr_pers(rg.graph, t1, groups);
    Attr w2 = attr_pers(rg.graph, t2, groups);
    for (Vertex v : t1) CHECK(w1.in[v]);
    for (Vertex v = 0; v < rg.graph.num_vertices(); ++v)
      if (w1.in[v]) CHECK(w2.in[v]);
  }
}

TEST_CASE("zielonka_pers and qsolve_pers triple-check against the oracle") {
  AugmentedGame p1 = reach_to_parity(pers1());
  SolveResult zp = zielonka_pers(p1.graph, p1.objective.priority, p1.assumption.persistent);
  CHECK(zp.region(0).size() == 3);
  QSolveResult qp = qsolve_pers(p1.graph, p1.objective.priority, p1.assumption.persistent);
  CHECK(qp.result.region(0).size() == 3);

  int games = 0;
  for (int seed = 0; seed < 200; ++seed) {
    RandomGameSpec spec;
    spec.vertices = 3 + seed % 6;
    spec.edges = spec.vertices * 2;
    spec.max_priority = 4;
    spec.assumption = Assumption::Kind::PersistentLiveGroups;
    spec.seed = 10400 + seed;
    AugmentedGame rg = random_game(spec);
    auto ref = oracle_winners(rg);
    SolveResult z = zielonka_pers(rg.graph, rg.objective.priority, rg.assumption.persistent);
    if (z.winner != ref) CAPTURE(serialize_game(doc_of_augmented(rg)));
    CHECK(z.winner == ref);
    check_strategy_wins(rg, z);
    QSolveResult q = qsolve_pers(rg.graph, rg.objective.priority, rg.assumption.persistent);
    CHECK(q.result.winner == ref);
    CHECK(static_cast<double>(q.calls) <= q.bound());
    check_strategy_wins(rg, q.result);
    ++games;
  }
  CHECK(games == 200);

  // Empty groups: qsolve equals parys regions.
  for (int seed = 0; seed < 40; ++seed) {
    RandomGameSpec spec;
    spec.vertices = 5;
    spec.edges = 10;
    spec.max_priority = 3;
    spec.seed = 11500 + seed;
    AugmentedGame rg = random_game(spec);
    QSolveResult q = qsolve_pers(rg.graph, rg.objective.priority, {});
    SolveResult z = solve_parity_zielonka(rg.graph, rg.objective.priority);
    CHECK(q.result.winner == z.winner);
  }
}

TEST_CASE("dispatcher picks a pipeline per class and records it") {
  SolveOptions opts;
  opts.limits = kLoose;
  DispatchResult live = solve_augmented(fig2(true), opts);
  CHECK(live.result.winner[0] == 0);
  CHECK(live.pipeline.find("to_rabin") != std::string::npos);

  DispatchResult plain = solve_augmented(fig2(false), opts);
  CHECK(plain.result.winner[0] == 1);
  CHECK(plain.pipeline == "reachability");

  DispatchResult pers = solve_augmented(pers1(), opts);
  CHECK(pers.result.winner[0] == 0);
  CHECK(pers.pipeline == "attr_pers");

  DispatchResult fig3r = solve_augmented(fig3(), opts);
  CHECK(fig3r.result.winner[fig3().graph.vertex("w1")] == 1);

  AugmentedGame bad = pers1();
  SolveOptions wrong;
  wrong.algo = Algo::Colive;
  CHECK_THROWS_AS(solve_augmented(bad, wrong), Error);

  // Witnesses on request: every lost vertex carries a P1 lasso.
  SolveOptions with_witness = opts;
  with_witness.want_witness = true;
  DispatchResult w = solve_augmented(fig2(false), with_witness);
  AugmentedGame tail = reach_to_parity(fig2(false));
  CHECK(w.result.witness.size() == 2);
  for (const auto& [v, lasso] : w.result.witness) {
    InfSetProfile p = profile_of_lasso(tail.graph, lasso.stem, lasso.cycle);
    CHECK(classify_infset(p, tail) == 1);
  }
}

TEST_CASE("attr_pers smoke check at a thousand vertices") {
  RandomGameSpec spec;
  spec.vertices = 1000;
  spec.edges = 3000;
  spec.assumption = Assumption::Kind::PersistentLiveGroups;
  spec.parity = false;
  spec.seed = 424242;
  AugmentedGame game = random_game(spec);
  auto t0 = std::chrono::steady_clock::now();
  Attr a = attr_pers(game.graph, game.objective.target, game.assumption.persistent);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  CHECK(ms < 2000);
  for (Vertex v : game.objective.target) CHECK(a.in[v]);
}
