#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/io.hpp"
#include "core/random_games.hpp"
#include "core/reductions.hpp"
#include "support.hpp"

using namespace aug;
using namespace aug::test;

TEST_CASE("fixture round trip is byte stable") {
  for (const char* name : {"fig2.game", "fig3.game", "pers1.game", "fig2-noassume.game"}) {
    GameDoc doc = parse_game(fixture_text(name));
    std::string once = serialize_game(doc);
    std::string twice = serialize_game(parse_game(once));
    CHECK(once == twice);
  }
}

TEST_CASE("random games survive a round trip for every assumption class") {
  using K = Assumption::Kind;
  for (K kind : {K::None, K::LiveEdges, K::CoLiveEdges, K::LiveGroups,
                 K::PersistentLiveGroups, K::LiveCnfGroups}) {
    for (int seed = 0; seed < 10; ++seed) {
      RandomGameSpec spec;
      spec.vertices = 6;
      spec.edges = 12;
      spec.assumption = kind;
      spec.parity = seed % 2 == 0;
      spec.seed = 77 + seed;
      AugmentedGame game = random_game(spec);
      std::string text = serialize_game(doc_of_augmented(game));
      GameDoc back = parse_game(text);
      CHECK(serialize_game(back) == text);
      AugmentedGame again = to_augmented(back);
      CHECK(again.graph.num_vertices() == game.graph.num_vertices());
      CHECK(again.graph.num_edges() == game.graph.num_edges());
      CHECK(again.assumption.kind == game.assumption.kind);
    }
  }
}

TEST_CASE("rabin objectives serialize through the pair extension") {
  AugmentedGame par = to_augmented(parse_game(fixture_text("fig2.game")));
  par.objective = Objective::parity({1, 1, 2});
  RabinReduction rabin = to_rabin(par);
  std::string text = serialize_game(doc_of_augmented(rabin.game));
  GameDoc back = parse_game(text);
  CHECK(serialize_game(back) == text);
  CHECK(back.objective->kind == Objective::Kind::Rabin);
  CHECK(back.objective->pairs.size() == rabin.game.objective.pairs.size());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_game("vertex a owner=2\n"), doctest::Contains("line 1"), Error);
  CHECK_THROWS_WITH_AS(parse_game("game g\nfrobnicate x\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_game(""), doctest::Contains("no vertices"), Error);
  CHECK_THROWS_WITH_AS(parse_game("vertex a owner=0\nedge a b\n"),
                       doctest::Contains("unknown vertex"), Error);
  // T not a subset of S is a semantic error.
  std::string bad =
      "vertex s owner=0\nvertex q owner=1\nedge s q\nedge q s\n"
      "objective reach q\nassume pers G1 S={s} C={(s,q)} T={q}\n";
  CHECK_THROWS_WITH_AS(parse_game(bad), doctest::Contains("subset"), Error);
  // Mixing assumption classes is rejected.
  std::string mixed =
      "vertex s owner=0\nvertex q owner=1\nedge s q\nedge q s\n"
      "objective reach q\nassume live (q,s)\nassume colive (q,s)\n";
  CHECK_THROWS_WITH_AS(parse_game(mixed), doctest::Contains("multiple assumption"), Error);
  // Assumption edges must come from the environment unless the flag is set.
  std::string p0edge =
      "vertex s owner=0\nvertex q owner=1\nedge s q\nedge q s\n"
      "objective reach q\nassume live (s,q)\n";
  CHECK_THROWS_AS(parse_game(p0edge), Error);
  ParseOptions allow;
  allow.allow_p0_assumption_edges = true;
  CHECK_NOTHROW(parse_game(p0edge, allow));
  // Totality is demanded without the dead-end flag.
  CHECK_THROWS_WITH_AS(parse_game("vertex a owner=0\nobjective reach a\n"),
                       doctest::Contains("no outgoing edge"), Error);
  CHECK_NOTHROW(parse_game("deadends\nvertex a owner=0\nobjective reach a\n"));
}

TEST_CASE("result serialization") {
  AugmentedGame game = fig2(true);
  SolveResult r;
  r.winner = {0, 0, 0};
  r.strategy = {game.graph.vertex("r"), -1, -1};
  LassoWitness lasso;
  lasso.stem = {game.graph.vertex("w")};
  lasso.cycle = {game.graph.vertex("r"), game.graph.vertex("w")};
  r.witness[game.graph.vertex("w")] = lasso;
  std::string text = serialize_result(game.graph, r);
  CHECK(text ==
        "winner w 0\nwinner r 0\nwinner g 0\n"
        "strategy w -> r\n"
        "witness w stem w cycle r w\n");
  auto strat = parse_strategy(game.graph, text);
  CHECK(strat.size() == 1);
  CHECK(strat.at(game.graph.vertex("w")) == game.graph.vertex("r"));
}

TEST_CASE("DIMACS parsing") {
  CnfFormula f = parse_dimacs(fixture_text("fig4.cnf"));
  CHECK(f.vars == 3);
  CHECK(f.clauses.size() == 3);
  CHECK(f.clauses[0] == std::vector<int>{1, 2, -3});
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n5 0\n"), Error);
  CHECK(parse_dimacs("p cnf 2 2\n1 -2 0 2\n1 0").clauses.size() == 2);
}
