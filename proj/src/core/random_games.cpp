#include "core/random_games.hpp"

#include <algorithm>
#include <random>

namespace aug {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <typename T>
std::vector<T> sample(std::mt19937_64& rng, const std::vector<T>& pool, int count) {
  std::vector<T> xs = pool;
  for (size_t i = 0; i < xs.size(); ++i) std::swap(xs[i], xs[i + rng() % (xs.size() - i)]);
  xs.resize(std::min<size_t>(count, xs.size()));
  return xs;
}

}  // namespace

AugmentedGame random_game(const RandomGameSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  AugmentedGame game;
  game.name = "random";
  GameGraph& g = game.graph;
  const int n = std::max(spec.vertices, spec.alternating ? 2 : 1);

  for (int v = 0; v < n; ++v) {
    int owner = spec.alternating ? v % 2 : pick(rng, 0, 1);
    g.add_vertex("v" + std::to_string(v), owner);
  }

  auto legal_target = [&](Vertex u, Vertex w) {
    if (spec.no_self_loops && u == w) return false;
    if (spec.alternating && g.owner(u) == g.owner(w)) return false;
    return true;
  };
  auto random_target = [&](Vertex u) {
    for (int tries = 0; tries < 4 * n; ++tries) {
      Vertex w = pick(rng, 0, n - 1);
      if (legal_target(u, w)) return w;
    }
    for (Vertex w = 0; w < n; ++w)
      if (legal_target(u, w)) return w;
    throw internal_error("random_game: no legal edge target");
  };

  for (Vertex v = 0; v < n; ++v) g.add_edge(v, random_target(v));
  int budget = std::max(spec.edges - n, 0);
  for (int i = 0; i < budget; ++i) {
    Vertex u = pick(rng, 0, n - 1);
    g.add_edge(u, random_target(u));
  }

  if (spec.parity) {
    std::vector<int> prio(n);
    for (int& p : prio) p = pick(rng, 0, spec.max_priority);
    game.objective = Objective::parity(std::move(prio));
  } else {
    std::vector<Vertex> t;
    for (Vertex v = 0; v < n; ++v)
      if (pick(rng, 0, 3) == 0) t.push_back(v);
    if (t.empty()) t.push_back(pick(rng, 0, n - 1));
    game.objective = Objective::reach(std::move(t));
  }

  std::vector<EdgeId> env_edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (g.owner(g.edge(e).first) == 1) env_edges.push_back(e);
  std::vector<EdgeId> ctl_edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (g.owner(g.edge(e).first) == 0) ctl_edges.push_back(e);

  switch (spec.assumption) {
    case Assumption::Kind::None:
      break;
    case Assumption::Kind::LiveEdges:
      game.assumption = Assumption::live_edges(sample(rng, env_edges, pick(rng, 1, 3)));
      break;
    case Assumption::Kind::CoLiveEdges:
      game.assumption = Assumption::colive_edges(sample(rng, env_edges, pick(rng, 1, 3)));
      break;
    case Assumption::Kind::LiveGroups: {
      std::vector<std::vector<EdgeId>> groups;
      int count = pick(rng, 1, 3);
      for (int i = 0; i < count; ++i) {
        auto h = sample(rng, env_edges, pick(rng, 1, 3));
        if (!h.empty()) groups.push_back(std::move(h));
      }
      if (!groups.empty()) game.assumption = Assumption::live_groups(std::move(groups));
      break;
    }
    case Assumption::Kind::PersistentLiveGroups: {
      std::vector<PersistentLiveGroup> ps;
      int count = pick(rng, 1, 2);
      std::vector<Vertex> all;
      for (Vertex v = 0; v < n; ++v) all.push_back(v);
      for (int i = 0; i < count; ++i) {
        PersistentLiveGroup p;
        p.region = sorted_unique(sample(rng, all, pick(rng, 1, n)));
        p.target = sorted_unique(sample(rng, p.region, pick(rng, 0, 2)));
        p.committed = sorted_unique(sample(rng, ctl_edges, pick(rng, 0, 3)));
        ps.push_back(std::move(p));
      }
      game.assumption = Assumption::persistent_groups(std::move(ps));
      break;
    }
    case Assumption::Kind::LiveCnfGroups: {
      std::vector<VertexCnf> cnf;
      std::vector<Vertex> env;
      for (Vertex v = 0; v < n; ++v)
        if (g.owner(v) == 1) env.push_back(v);
      for (Vertex v : sample(rng, env, pick(rng, 1, 2))) {
        VertexCnf vc;
        vc.vertex = v;
        int clauses = pick(rng, 1, 2);
        for (int i = 0; i < clauses; ++i) {
          auto c = sample(rng, g.out(v), pick(rng, 1, 2));
          vc.clauses.push_back(sorted_unique(std::move(c)));
        }
        cnf.push_back(std::move(vc));
      }
      if (!cnf.empty()) game.assumption = Assumption::cnf_groups(std::move(cnf));
      break;
    }
  }

  game.init = 0;
  return game;
}

LassoWitness random_lasso(const GameGraph& g, const std::vector<Vertex>& inside,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : inside) in[v] = 1;
  auto moves = [&](Vertex v) {
    std::vector<Vertex> ms;
    for (EdgeId e : g.out(v))
      if (in[g.edge(e).second]) ms.push_back(g.edge(e).second);
    return ms;
  };
  // Start anywhere in `inside` that can keep walking.
  std::vector<Vertex> starts;
  for (Vertex v : inside)
    if (!moves(v).empty()) starts.push_back(v);
  if (starts.empty()) throw semantic_error("random_lasso: region has no internal edge");

  for (int attempt = 0; attempt < 64; ++attempt) {
    Vertex at = starts[rng() % starts.size()];
    std::vector<Vertex> walk{at};
    std::vector<int> seen_at(g.num_vertices(), -1);
    seen_at[at] = 0;
    for (int step = 0; step < 4 * g.num_vertices() + 8; ++step) {
      auto ms = moves(at);
      if (ms.empty()) break;
      at = ms[rng() % ms.size()];
      if (seen_at[at] >= 0) {
        LassoWitness lasso;
        lasso.stem.assign(walk.begin(), walk.begin() + seen_at[at]);
        lasso.cycle.assign(walk.begin() + seen_at[at], walk.end());
        return lasso;
      }
      seen_at[at] = static_cast<int>(walk.size());
      walk.push_back(at);
    }
  }
  throw semantic_error("random_lasso: no cycle found in region");
}

}  // namespace aug
