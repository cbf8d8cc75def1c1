#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/oracle.hpp"
#include "core/random_games.hpp"
#include "core/reductions.hpp"
#include "core/transform.hpp"
#include "ltl_lasso.hpp"
#include "support.hpp"

using namespace aug;
using namespace aug::test;

namespace {

// Reference decision for "P1 beats this edge filter from v": enumerate every
// realizable profile of the filtered graph and classify it. Independent of
// the SCC-based search in the library.
bool p1_beats_by_enumeration(const AugmentedGame& game, const std::vector<char>& edge_ok,
                             Vertex start) {
  const GameGraph& g = game.graph;
  GameGraph view;
  for (Vertex v = 0; v < g.num_vertices(); ++v) view.add_vertex(g.name(v), g.owner(v));
  view.set_allow_dead_ends(true);
  std::vector<EdgeId> back;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (edge_ok[e]) {
      view.add_edge(g.edge(e).first, g.edge(e).second);
      back.push_back(e);
    }
  for (const auto& p : enumerate_infsets(view, start, EnumerateLimits{20})) {
    InfSetProfile orig;
    orig.vertices = p.vertices;
    for (EdgeId e : p.edges) orig.edges.push_back(back[e]);
    orig.edges = sorted_unique(std::move(orig.edges));
    if (classify_infset(orig, game) == 1) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("oracle settles the fig2 game both ways") {
  AugmentedGame live = reach_to_parity(fig2(true));
  SolveResult with = oracle_solve(live);
  CHECK(with.winner[live.graph.vertex("w")] == 0);
  CHECK(with.winner[live.graph.vertex("r")] == 0);
  CHECK(with.winner[live.graph.vertex("g")] == 0);

  AugmentedGame plain = reach_to_parity(fig2(false));
  SolveResult without = oracle_solve(plain);
  CHECK(without.winner[plain.graph.vertex("w")] == 1);
  CHECK(without.winner[plain.graph.vertex("g")] == 0);
  // Losing vertices carry witness lassos that classify for P1.
  for (const auto& [v, lasso] : without.witness) {
    InfSetProfile p = profile_of_lasso(plain.graph, lasso.stem, lasso.cycle);
    CHECK(classify_infset(p, plain) == 1);
  }
  CHECK(without.witness.count(plain.graph.vertex("w")) == 1);
}

TEST_CASE("oracle on fig3 rejects the doubled grant") {
  AugmentedGame game = reach_to_parity(fig3());
  SolveResult r = oracle_solve(game, OracleLimits{24, 1000000});
  CHECK(r.winner[game.graph.vertex("w1")] == 1);
}

TEST_CASE("all-even priorities are trivially won") {
  RandomGameSpec spec;
  spec.vertices = 5;
  spec.edges = 10;
  spec.seed = 5;
  AugmentedGame game = random_game(spec);
  for (auto& p : game.objective.priority) p = 2 * (p % 2);
  SolveResult r = oracle_solve(game);
  for (Vertex v = 0; v < game.graph.num_vertices(); ++v) CHECK(r.winner[v] == 0);
}

TEST_CASE("search-based P1 decision equals profile enumeration") {
  using K = Assumption::Kind;
  int checked = 0;
  for (K kind : {K::None, K::LiveEdges, K::CoLiveEdges, K::LiveGroups,
                 K::PersistentLiveGroups, K::LiveCnfGroups}) {
    for (int seed = 0; seed < 30; ++seed) {
      RandomGameSpec spec;
      spec.vertices = 5;
      spec.edges = 9;
      spec.assumption = kind;
      spec.seed = 900 + seed;
      AugmentedGame game = random_game(spec);
      // A handful of strategy filters per game, including "all P0 edges".
      for (int variant = 0; variant < 3; ++variant) {
        std::vector<char> edge_ok(game.graph.num_edges(), 0);
        for (Vertex v = 0; v < game.graph.num_vertices(); ++v) {
          const auto& out = game.graph.out(v);
          if (game.graph.owner(v) == 1 || variant == 2) {
            for (EdgeId e : out) edge_ok[e] = 1;
          } else if (!out.empty()) {
            edge_ok[out[(seed + variant + v) % out.size()]] = 1;
          }
        }
        SearchContext ctx{game, edge_ok};
        auto bad = p1_winning_from(ctx);
        for (Vertex v = 0; v < game.graph.num_vertices(); ++v) {
          bool reference = p1_beats_by_enumeration(game, edge_ok, v);
          CHECK(bad[v] == reference);
          if (bad[v] != reference) {
            CAPTURE(serialize_game(doc_of_augmented(game)));
            CAPTURE(seed);
            CAPTURE(variant);
            CAPTURE(v);
          }
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("verifier accepts the fig4 caption strategy and rejects a conflicted one") {
  AugmentedGame sat = sat_to_game(parse_dimacs(fixture_text("fig4.cnf")));
  AugmentedGame tail = reach_to_parity(sat);
  const GameGraph& g = tail.graph;

  std::map<Vertex, Vertex> strat;
  strat[g.vertex("C1")] = g.vertex("x1");
  strat[g.vertex("C2")] = g.vertex("x2");
  strat[g.vertex("C3")] = g.vertex("x3");
  strat[g.vertex("goal")] = g.vertex("goal");
  VerifyOutcome ok = verify_strategy(tail, strat, {g.vertex("v0")});
  CHECK(ok.ok);

  // (x1) /\ (-x1): any positional choice is conflicted.
  CnfFormula contradiction;
  contradiction.vars = 1;
  contradiction.clauses = {{1}, {-1}};
  AugmentedGame bad = reach_to_parity(sat_to_game(contradiction));
  const GameGraph& bg = bad.graph;
  std::map<Vertex, Vertex> bad_strat;
  bad_strat[bg.vertex("C1")] = bg.vertex("x1");
  bad_strat[bg.vertex("C2")] = bg.vertex("nx1");
  bad_strat[bg.vertex("goal")] = bg.vertex("goal");
  VerifyOutcome rejected = verify_strategy(bad, bad_strat, {bg.vertex("v0")});
  CHECK_FALSE(rejected.ok);
  REQUIRE(rejected.counterexample.has_value());
  InfSetProfile p =
      profile_of_lasso(bg, rejected.counterexample->stem, rejected.counterexample->cycle);
  CHECK(classify_infset(p, bad) == 1);
  // The counterexample alternates between the conflicting clause challenges.
  bool sees_c1 = false, sees_c2 = false;
  for (Vertex v : rejected.counterexample->cycle) {
    if (v == bg.vertex("C1")) sees_c1 = true;
    if (v == bg.vertex("C2")) sees_c2 = true;
  }
  CHECK(sees_c1);
  CHECK(sees_c2);

  // Empty claim is fine; a missing move on a reachable vertex is an error.
  CHECK(verify_strategy(tail, strat, {}).ok);
  std::map<Vertex, Vertex> gap = strat;
  gap.erase(g.vertex("C2"));
  CHECK_THROWS_WITH_AS(verify_strategy(tail, gap, {g.vertex("v0")}),
                       doctest::Contains("without a move"), Error);
}

TEST_CASE("sat_brute basics") {
  CHECK(sat_brute(parse_dimacs(fixture_text("fig4.cnf"))));
  CnfFormula f;
  f.vars = 1;
  f.clauses = {{1}, {-1}};
  CHECK_FALSE(sat_brute(f));
  CnfFormula empty;
  empty.vars = 0;
  CHECK(sat_brute(empty));
  CnfFormula big;
  big.vars = 21;
  CHECK_THROWS_AS(sat_brute(big), Error);
}

TEST_CASE("oracle bound errors") {
  RandomGameSpec spec;
  spec.vertices = 8;
  spec.edges = 24;
  spec.seed = 3;
  AugmentedGame game = random_game(spec);
  CHECK_THROWS_AS(oracle_solve(game, OracleLimits{18, 1000000}), Error);
  OracleLimits tiny;
  tiny.max_edges = 64;
  tiny.max_strategies = 2;
  CHECK_THROWS_AS(oracle_solve(game, tiny), Error);
}
