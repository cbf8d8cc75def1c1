#include "core/oracle.hpp"

#include <algorithm>
#include <thread>

namespace aug {

namespace {

// Positional Player-0 strategies indexed in mixed radix over the declaration
// order of V0 and of each vertex's out-edges. A stranded vertex contributes
// one "no move" digit.
struct StrategySpace {
  std::vector<Vertex> p0;          // P0 vertices in declaration order
  std::vector<long long> radix;    // out-degree (>= 1)
  long long total = 1;

  explicit StrategySpace(const GameGraph& g) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.owner(v) != 0) continue;
      p0.push_back(v);
      long long r = std::max<size_t>(g.out(v).size(), 1);
      radix.push_back(r);
      if (total <= (1LL << 62) / r) total *= r;
      else total = -1;  // overflow: certainly beyond any sane bound
    }
  }

  // edge_ok mask for strategy number `idx`.
  std::vector<char> edges(const GameGraph& g, long long idx) const {
    std::vector<char> ok(g.num_edges(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (g.owner(v) == 1)
        for (EdgeId e : g.out(v)) ok[e] = 1;
    for (size_t i = 0; i < p0.size(); ++i) {
      long long digit = idx % radix[i];
      idx /= radix[i];
      const auto& out = g.out(p0[i]);
      if (!out.empty()) ok[out[digit]] = 1;
    }
    return ok;
  }

  std::vector<Vertex> choices(const GameGraph& g, long long idx) const {
    std::vector<Vertex> strat(g.num_vertices(), -1);
    for (size_t i = 0; i < p0.size(); ++i) {
      long long digit = idx % radix[i];
      idx /= radix[i];
      const auto& out = g.out(p0[i]);
      if (!out.empty()) strat[p0[i]] = g.edge(out[digit]).second;
    }
    return strat;
  }
};

void check_limits(const AugmentedGame& game, const StrategySpace& space,
                  const OracleLimits& limits) {
  if (game.graph.num_edges() > limits.max_edges)
    throw bound_error("oracle: " + std::to_string(game.graph.num_edges()) +
                      " edges exceed the bound of " + std::to_string(limits.max_edges) +
                      " (raise --oracle-max-edges)");
  if (space.total < 0 || space.total > limits.max_strategies)
    throw bound_error("oracle: strategy space exceeds the bound of " +
                      std::to_string(limits.max_strategies) +
                      " positional strategies (raise --oracle-max-strategies)");
}

std::vector<char> good_vertices(const AugmentedGame& game, const std::vector<char>& edge_ok) {
  SearchContext ctx{game, edge_ok};
  std::vector<char> bad = p1_winning_from(ctx);
  std::vector<char> good(bad.size());
  for (size_t i = 0; i < bad.size(); ++i) good[i] = !bad[i];
  return good;
}

}  // namespace

SolveResult oracle_solve(const AugmentedGame& game, const OracleLimits& limits,
                         bool want_witnesses, int jobs) {
  if (game.objective.kind == Objective::Kind::Reach)
    throw usage_error("oracle: reachability objective (call reach_to_parity first)");
  const GameGraph& g = game.graph;
  StrategySpace space(g);
  check_limits(game, space, limits);

  const int n = g.num_vertices();
  std::vector<char> w0(n, 0);

  auto scan = [&](long long from, long long to, std::vector<char>& acc) {
    for (long long idx = from; idx < to; ++idx) {
      auto ok = space.edges(g, idx);
      auto good = good_vertices(game, ok);
      for (int v = 0; v < n; ++v)
        if (good[v]) acc[v] = 1;
    }
  };

  if (jobs > 1 && space.total > 64) {
    std::vector<std::thread> pool;
    std::vector<std::vector<char>> parts(jobs, std::vector<char>(n, 0));
    long long chunk = (space.total + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      long long from = t * chunk, to = std::min<long long>(space.total, from + chunk);
      if (from >= to) break;
      pool.emplace_back([&, from, to, t] { scan(from, to, parts[t]); });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
      for (int v = 0; v < n; ++v)
        if (part[v]) w0[v] = 1;
  } else {
    scan(0, space.total, w0);
  }

  // One uniform positional strategy wins everywhere P0 wins at all (the
  // winning condition is a Rabin disjunction over the edge arena); pick the
  // first strategy whose good set covers W0.
  long long uniform = -1;
  std::vector<char> uniform_edges;
  for (long long idx = 0; idx < space.total && uniform < 0; ++idx) {
    auto ok = space.edges(g, idx);
    auto good = good_vertices(game, ok);
    bool covers = true;
    for (int v = 0; v < n; ++v)
      if (w0[v] && !good[v]) covers = false;
    if (covers) {
      uniform = idx;
      uniform_edges = std::move(ok);
    }
  }
  if (uniform < 0)
    throw internal_error("oracle: no uniform positional winning strategy found");

  SolveResult r;
  r.winner.assign(n, 1);
  r.strategy.assign(n, -1);
  auto choices = space.choices(g, uniform);
  for (int v = 0; v < n; ++v) {
    if (w0[v]) {
      r.winner[v] = 0;
      if (g.owner(v) == 0) r.strategy[v] = choices[v];
    }
  }

  if (want_witnesses) {
    SearchContext ctx{game, uniform_edges};
    for (int v = 0; v < n; ++v) {
      if (r.winner[v] != 1) continue;
      auto p = find_p1_profile(ctx, v);
      // A losing vertex without a lasso lost through a stranded P0 vertex.
      if (p) r.witness[v] = lasso_of_profile(g, uniform_edges, v, *p);
    }
  }
  return r;
}

VerifyOutcome verify_strategy(const AugmentedGame& game, const std::map<Vertex, Vertex>& strat,
                              const std::vector<Vertex>& claim) {
  if (game.objective.kind == Objective::Kind::Reach)
    throw usage_error("verify: reachability objective (call reach_to_parity first)");
  const GameGraph& g = game.graph;
  for (Vertex v : claim)
    if (v < 0 || v >= g.num_vertices()) throw semantic_error("verify: unknown claim vertex");

  std::vector<char> edge_ok(g.num_edges(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto it = strat.find(v);
    if (g.owner(v) == 1 || it == strat.end()) {
      for (EdgeId e : g.out(v)) edge_ok[e] = 1;
      continue;
    }
    if (g.owner(v) != 0) throw semantic_error("verify: strategy entry on a Player-1 vertex");
    auto e = g.find_edge(v, it->second);
    if (!e)
      throw semantic_error("verify: strategy uses missing edge (" + g.name(v) + "," +
                           g.name(it->second) + ")");
    edge_ok[*e] = 1;
  }

  // Closure: every claim-reachable Player-0 vertex needs a move.
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> queue;
  for (Vertex v : claim)
    if (!seen[v]) {
      seen[v] = 1;
      queue.push_back(v);
    }
  for (size_t i = 0; i < queue.size(); ++i) {
    Vertex v = queue[i];
    if (g.owner(v) == 0 && !strat.count(v))
      throw semantic_error("verify: strategy leaves claim-reachable vertex '" + g.name(v) +
                           "' without a move");
    for (EdgeId e : g.out(v)) {
      if (!edge_ok[e]) continue;
      Vertex w = g.edge(e).second;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }

  VerifyOutcome out;
  SearchContext ctx{game, edge_ok};
  for (Vertex v : claim) {
    auto p = find_p1_profile(ctx, v);
    if (p) {
      out.ok = false;
      out.failed_vertex = v;
      out.counterexample = lasso_of_profile(g, edge_ok, v, *p);
      return out;
    }
  }
  out.ok = true;
  return out;
}

bool sat_brute(const CnfFormula& formula) {
  if (formula.vars > 20) throw bound_error("sat_brute: more than 20 variables");
  for (const auto& clause : formula.clauses)
    for (int lit : clause)
      if (lit == 0 || std::abs(lit) > formula.vars)
        throw semantic_error("sat_brute: literal out of range");
  const unsigned long long total = 1ULL << formula.vars;
  for (unsigned long long bits = 0; bits < total; ++bits) {
    bool all = true;
    for (const auto& clause : formula.clauses) {
      bool sat = false;
      for (int lit : clause) {
        bool val = (bits >> (std::abs(lit) - 1)) & 1;
        if ((lit > 0) == val) sat = true;
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace aug
