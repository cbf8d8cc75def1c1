#include "core/profile.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace aug {

namespace {

// Iterative Tarjan over an induced subgraph. `succ(v)` yields successors.
// Components come out in a deterministic order; vertices inside are sorted.
std::vector<std::vector<Vertex>> strongly_connected_components(
    const std::vector<Vertex>& verts, const std::function<std::vector<Vertex>(Vertex)>& succ) {
  std::unordered_map<Vertex, int> index, low;
  std::vector<Vertex> stack;
  std::vector<char> on_stack_flag;  // addressed by index[]
  std::vector<std::vector<Vertex>> comps;
  int next = 0;

  struct Frame {
    Vertex v;
    std::vector<Vertex> ss;
    size_t i = 0;
  };

  for (Vertex root : verts) {
    if (index.count(root)) continue;
    std::vector<Frame> call;
    call.push_back({root, succ(root)});
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack_flag.push_back(1);
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.i < f.ss.size()) {
        Vertex w = f.ss[f.i++];
        auto it = index.find(w);
        if (it == index.end()) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack_flag.push_back(1);
          call.push_back({w, succ(w)});
        } else if (on_stack_flag[it->second]) {
          low[f.v] = std::min(low[f.v], it->second);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<Vertex> comp;
          while (true) {
            Vertex w = stack.back();
            stack.pop_back();
            on_stack_flag[index[w]] = 0;
            comp.push_back(w);
            if (w == f.v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        Vertex done = f.v;
        call.pop_back();
        if (!call.empty()) call.back().ss.size();  // keep frame reference valid
        if (!call.empty()) {
          Frame& parent = call.back();
          low[parent.v] = std::min(low[parent.v], low[done]);
        }
      }
    }
  }
  return comps;
}

}  // namespace

bool profile_realizable(const GameGraph& g, const InfSetProfile& p) {
  if (p.edges.empty()) return false;
  std::vector<char> in_i(g.num_vertices(), 0);
  for (Vertex v : p.vertices) {
    if (v < 0 || v >= g.num_vertices()) return false;
    in_i[v] = 1;
  }
  std::vector<char> endpoint(g.num_vertices(), 0);
  std::vector<char> has_out(g.num_vertices(), 0);
  for (EdgeId e : p.edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    auto [u, v] = g.edge(e);
    if (!in_i[u] || !in_i[v]) return false;
    endpoint[u] = endpoint[v] = 1;
    has_out[u] = 1;
  }
  for (Vertex v : p.vertices)
    if (!endpoint[v] || !has_out[v]) return false;

  // Strong connectivity of (I, F).
  std::vector<std::vector<Vertex>> adj(g.num_vertices());
  for (EdgeId e : p.edges) adj[g.edge(e).first].push_back(g.edge(e).second);
  auto comps = strongly_connected_components(
      p.vertices, [&](Vertex v) { return adj[v]; });
  return comps.size() == 1;
}

void check_profile(const GameGraph& g, const InfSetProfile& p) {
  if (!profile_realizable(g, p))
    throw semantic_error("inf-set profile is not realizable");
}

int classify_infset(const InfSetProfile& p, const AugmentedGame& game) {
  const GameGraph& g = game.graph;
  if (game.objective.kind == Objective::Kind::Reach)
    throw usage_error("classify_infset: reachability objective (call reach_to_parity first)");
  check_profile(g, p);

  std::vector<char> in_i(g.num_vertices(), 0);
  for (Vertex v : p.vertices) in_i[v] = 1;
  std::vector<char> in_f(g.num_edges(), 0);
  for (EdgeId e : p.edges) in_f[e] = 1;

  bool psi = true;
  const Assumption& a = game.assumption;
  switch (a.kind) {
    case Assumption::Kind::None:
      break;
    case Assumption::Kind::LiveEdges:
      for (EdgeId e : a.edges)
        if (in_i[g.edge(e).first] && !in_f[e]) psi = false;
      break;
    case Assumption::Kind::CoLiveEdges:
      for (EdgeId e : a.edges)
        if (in_f[e]) psi = false;
      break;
    case Assumption::Kind::LiveGroups:
      for (const auto& h : a.groups) {
        bool triggered = false, satisfied = false;
        for (EdgeId e : h) {
          if (in_i[g.edge(e).first]) triggered = true;
          if (in_f[e]) satisfied = true;
        }
        if (triggered && !satisfied) psi = false;
      }
      break;
    case Assumption::Kind::PersistentLiveGroups:
      for (const auto& grp : a.persistent) {
        bool inside_s = true, hits_t = false, all_committed = true;
        for (Vertex v : p.vertices) {
          if (!contains(grp.region, v)) inside_s = false;
          if (contains(grp.target, v)) hits_t = true;
        }
        std::vector<char> src_c(g.num_vertices(), 0);
        for (EdgeId e : grp.committed) src_c[g.edge(e).first] = 1;
        for (EdgeId e : p.edges)
          if (src_c[g.edge(e).first] && !contains(grp.committed, e)) all_committed = false;
        if (inside_s && !hits_t && all_committed) psi = false;  // group violated
      }
      break;
    case Assumption::Kind::LiveCnfGroups:
      for (const auto& vc : a.cnf) {
        if (!in_i[vc.vertex]) continue;
        for (const auto& clause : vc.clauses) {
          bool hit = false;
          for (EdgeId e : clause)
            if (in_f[e]) hit = true;
          if (!hit) psi = false;
        }
      }
      break;
  }

  bool phi = false;
  if (game.objective.kind == Objective::Kind::Parity) {
    int best = -1;
    for (Vertex v : p.vertices) best = std::max(best, game.objective.priority[v]);
    phi = best >= 0 && best % 2 == 0;
  } else {
    for (const auto& pair : game.objective.pairs) {
      bool fin = false, avoid = false;
      for (Vertex v : pair.fin)
        if (in_i[v]) fin = true;
      for (Vertex v : pair.avoid)
        if (in_i[v]) avoid = true;
      if (fin && !avoid) phi = true;
    }
  }

  return (!psi || phi) ? 0 : 1;
}

std::vector<InfSetProfile> enumerate_infsets(const GameGraph& g, Vertex start,
                                             const EnumerateLimits& limits) {
  const int m = g.num_edges();
  if (m > limits.max_edges)
    throw bound_error("enumerate_infsets: " + std::to_string(m) + " edges exceed the bound of " +
                      std::to_string(limits.max_edges) + " (raise --oracle-max-edges)");
  if (start < 0 || start >= g.num_vertices())
    throw semantic_error("enumerate_infsets: unknown start vertex");

  std::vector<char> reach(g.num_vertices(), 0);
  std::deque<Vertex> q{start};
  reach[start] = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (EdgeId e : g.out(v)) {
      Vertex w = g.edge(e).second;
      if (!reach[w]) {
        reach[w] = 1;
        q.push_back(w);
      }
    }
  }

  std::vector<InfSetProfile> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    InfSetProfile p;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) p.edges.push_back(e);
    std::vector<Vertex> vs;
    for (EdgeId e : p.edges) {
      vs.push_back(g.edge(e).first);
      vs.push_back(g.edge(e).second);
    }
    p.vertices = sorted_unique(std::move(vs));
    bool entry = false;
    for (Vertex v : p.vertices)
      if (reach[v]) entry = true;
    if (!entry) continue;
    if (profile_realizable(g, p)) out.push_back(std::move(p));
  }
  return out;
}

InfSetProfile profile_of_lasso(const GameGraph& g, const std::vector<Vertex>& stem,
                               const std::vector<Vertex>& cycle) {
  if (cycle.empty()) throw semantic_error("lasso cycle must be nonempty");
  auto edge_of = [&](Vertex u, Vertex v) {
    auto e = g.find_edge(u, v);
    if (!e) throw semantic_error("lasso uses missing edge (" + g.name(u) + "," + g.name(v) + ")");
    return *e;
  };
  for (size_t i = 0; i + 1 < stem.size(); ++i) edge_of(stem[i], stem[i + 1]);
  if (!stem.empty()) edge_of(stem.back(), cycle.front());
  InfSetProfile p;
  std::vector<EdgeId> es;
  for (size_t i = 0; i < cycle.size(); ++i)
    es.push_back(edge_of(cycle[i], cycle[(i + 1) % cycle.size()]));
  p.edges = sorted_unique(std::move(es));
  p.vertices = sorted_unique(cycle);
  return p;
}

// ---- P1 profile search -----------------------------------------------------

namespace {

struct Component {
  std::vector<Vertex> vertices;  // sorted
  std::vector<EdgeId> edges;     // sorted, internal edges
};

struct SearchPlan {
  const AugmentedGame& game;
  std::vector<char> recur_edge;  // edges usable inside the tail (no co-live)
  std::vector<char> src_of_committed;  // per group index unused; see below

  explicit SearchPlan(const SearchContext& ctx) : game(ctx.game) {
    const GameGraph& g = game.graph;
    recur_edge = ctx.edge_ok;
    if (game.assumption.kind == Assumption::Kind::CoLiveEdges)
      for (EdgeId e : game.assumption.edges) recur_edge[e] = 0;
  }
};

// Filters one candidate vertex set down to components where every play that
// recurs exactly over the component is winning for P1. `need_prio` is the
// priority that must appear (-1 for Rabin objectives).
void filter_components(const SearchPlan& plan, std::vector<Vertex> cand, int need_prio,
                       std::vector<Component>& accepted) {
  const GameGraph& g = plan.game.graph;
  const Assumption& a = plan.game.assumption;

  std::vector<char> in_cand(g.num_vertices(), 0);
  for (Vertex v : cand) in_cand[v] = 1;
  auto succ = [&](Vertex v) {
    std::vector<Vertex> ss;
    for (EdgeId e : g.out(v))
      if (plan.recur_edge[e] && in_cand[g.edge(e).second]) ss.push_back(g.edge(e).second);
    return ss;
  };

  for (auto& comp : strongly_connected_components(cand, succ)) {
    std::vector<char> in_c(g.num_vertices(), 0);
    for (Vertex v : comp) in_c[v] = 1;
    std::vector<EdgeId> internal;
    for (Vertex v : comp)
      for (EdgeId e : g.out(v))
        if (plan.recur_edge[e] && in_c[g.edge(e).second]) internal.push_back(e);
    std::sort(internal.begin(), internal.end());
    if (internal.empty()) continue;  // trivial SCC

    if (need_prio >= 0) {
      bool has = false;
      for (Vertex v : comp)
        if (plan.game.objective.priority[v] == need_prio) has = true;
      if (!has) continue;
    }

    std::vector<char> in_f(g.num_edges(), 0);
    for (EdgeId e : internal) in_f[e] = 1;

    // A persistent group with no escape inside the component dooms every
    // profile within it.
    if (a.kind == Assumption::Kind::PersistentLiveGroups) {
      bool doomed = false;
      for (const auto& grp : a.persistent) {
        bool escape = false;
        for (Vertex v : comp)
          if (!contains(grp.region, v) || contains(grp.target, v)) escape = true;
        if (!escape) {
          std::vector<char> src_c(g.num_vertices(), 0);
          for (EdgeId e : grp.committed) src_c[g.edge(e).first] = 1;
          for (EdgeId e : internal)
            if (src_c[g.edge(e).first] && !contains(grp.committed, e)) escape = true;
        }
        if (!escape) {
          doomed = true;
          break;
        }
      }
      if (doomed) continue;
    }

    // Vertices that no P1-good profile inside this component can contain.
    std::vector<Vertex> drop;
    switch (a.kind) {
      case Assumption::Kind::LiveEdges:
        for (EdgeId e : a.edges)
          if (in_c[g.edge(e).first] && !in_f[e]) drop.push_back(g.edge(e).first);
        break;
      case Assumption::Kind::LiveGroups:
        for (const auto& h : a.groups) {
          bool satisfied = false;
          for (EdgeId e : h)
            if (in_f[e]) satisfied = true;
          if (satisfied) continue;
          for (EdgeId e : h)
            if (in_c[g.edge(e).first]) drop.push_back(g.edge(e).first);
        }
        break;
      case Assumption::Kind::LiveCnfGroups:
        for (const auto& vc : a.cnf) {
          if (!in_c[vc.vertex]) continue;
          for (const auto& clause : vc.clauses) {
            bool hit = false;
            for (EdgeId e : clause)
              if (in_f[e]) hit = true;
            if (!hit) {
              drop.push_back(vc.vertex);
              break;
            }
          }
        }
        break;
      default:
        break;
    }
    if (plan.game.objective.kind == Objective::Kind::Rabin) {
      for (const auto& pair : plan.game.objective.pairs) {
        bool avoid_hit = false;
        for (Vertex v : pair.avoid)
          if (in_c[v]) avoid_hit = true;
        if (avoid_hit) continue;
        for (Vertex v : pair.fin)
          if (in_c[v]) drop.push_back(v);  // P0 would win this pair
      }
    }

    drop = sorted_unique(std::move(drop));
    if (drop.empty()) {
      accepted.push_back(Component{comp, internal});
    } else {
      std::vector<Vertex> rest;
      for (Vertex v : comp)
        if (!contains(drop, v)) rest.push_back(v);
      if (!rest.empty()) filter_components(plan, std::move(rest), need_prio, accepted);
    }
  }
}

std::vector<Component> p1_good_components(const SearchContext& ctx) {
  const AugmentedGame& game = ctx.game;
  if (game.objective.kind == Objective::Kind::Reach)
    throw usage_error("profile search: reachability objective (convert first)");
  SearchPlan plan(ctx);
  std::vector<Component> accepted;
  const GameGraph& g = game.graph;

  if (game.objective.kind == Objective::Kind::Parity) {
    std::vector<int> odds;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (game.objective.priority[v] % 2 == 1) odds.push_back(game.objective.priority[v]);
    odds = sorted_unique(std::move(odds));
    for (int p : odds) {
      std::vector<Vertex> cand;
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (game.objective.priority[v] <= p) cand.push_back(v);
      filter_components(plan, std::move(cand), p, accepted);
    }
  } else {
    std::vector<Vertex> cand;
    for (Vertex v = 0; v < g.num_vertices(); ++v) cand.push_back(v);
    filter_components(plan, std::move(cand), -1, accepted);
  }
  return accepted;
}

std::vector<char> forward_reach(const GameGraph& g, const std::vector<char>& edge_ok,
                                Vertex start) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<Vertex> q{start};
  seen[start] = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (EdgeId e : g.out(v)) {
      if (!edge_ok[e]) continue;
      Vertex w = g.edge(e).second;
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<char> p1_winning_from(const SearchContext& ctx) {
  const GameGraph& g = ctx.game.graph;
  std::vector<char> bad(g.num_vertices(), 0);
  for (const auto& comp : p1_good_components(ctx))
    for (Vertex v : comp.vertices) bad[v] = 1;
  // A stranded Player-0 vertex loses for her the moment the play arrives.
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.owner(v) != 0) continue;
    bool has_move = false;
    for (EdgeId e : g.out(v))
      if (ctx.edge_ok[e]) has_move = true;
    if (!has_move) bad[v] = 1;
  }
  // Backward closure over allowed edges.
  std::deque<Vertex> q;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (bad[v]) q.push_back(v);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (EdgeId e : g.in(v)) {
      if (!ctx.edge_ok[e]) continue;
      Vertex u = g.edge(e).first;
      if (!bad[u]) {
        bad[u] = 1;
        q.push_back(u);
      }
    }
  }
  return bad;
}

std::optional<InfSetProfile> find_p1_profile(const SearchContext& ctx, Vertex start) {
  auto comps = p1_good_components(ctx);
  if (comps.empty()) return std::nullopt;
  auto reach = forward_reach(ctx.game.graph, ctx.edge_ok, start);
  for (const auto& comp : comps) {
    bool hit = false;
    for (Vertex v : comp.vertices)
      if (reach[v]) hit = true;
    if (hit) return InfSetProfile{comp.vertices, comp.edges};
  }
  return std::nullopt;
}

LassoWitness lasso_of_profile(const GameGraph& g, const std::vector<char>& edge_ok, Vertex start,
                              const InfSetProfile& p) {
  std::vector<char> in_i(g.num_vertices(), 0);
  for (Vertex v : p.vertices) in_i[v] = 1;

  // Shortest path from start to the profile over allowed edges.
  std::vector<Vertex> parent(g.num_vertices(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<Vertex> q{start};
  seen[start] = 1;
  Vertex entry = in_i[start] ? start : -1;
  while (!q.empty() && entry < 0) {
    Vertex v = q.front();
    q.pop_front();
    for (EdgeId e : g.out(v)) {
      if (!edge_ok[e]) continue;
      Vertex w = g.edge(e).second;
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      if (in_i[w]) {
        entry = w;
        break;
      }
      q.push_back(w);
    }
  }
  if (entry < 0) throw internal_error("lasso_of_profile: profile not reachable");

  LassoWitness lasso;
  std::vector<Vertex> rev;
  for (Vertex v = entry; v != -1; v = parent[v]) rev.push_back(v);
  std::reverse(rev.begin(), rev.end());
  lasso.stem.assign(rev.begin(), rev.end() - 1);  // excludes the cycle entry

  // Closed walk from `entry` covering every profile edge.
  std::vector<std::vector<EdgeId>> adj(g.num_vertices());
  for (EdgeId e : p.edges) adj[g.edge(e).first].push_back(e);
  std::vector<char> used(g.num_edges(), 0);
  size_t remaining = p.edges.size();
  auto path_to = [&](Vertex from, const std::function<bool(Vertex)>& goal) {
    std::vector<Vertex> par(g.num_vertices(), -1);
    std::vector<char> vis(g.num_vertices(), 0);
    std::deque<Vertex> bq{from};
    vis[from] = 1;
    Vertex found = goal(from) ? from : -1;
    while (!bq.empty() && found < 0) {
      Vertex v = bq.front();
      bq.pop_front();
      for (EdgeId e : adj[v]) {
        Vertex w = g.edge(e).second;
        if (vis[w]) continue;
        vis[w] = 1;
        par[w] = v;
        if (goal(w)) {
          found = w;
          break;
        }
        bq.push_back(w);
      }
    }
    if (found < 0) throw internal_error("lasso_of_profile: profile not strongly connected");
    std::vector<Vertex> path;
    for (Vertex v = found; v != from; v = par[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;  // excludes `from`
  };

  std::vector<Vertex> walk{entry};
  Vertex cur = entry;
  while (remaining > 0) {
    EdgeId next = -1;
    for (EdgeId e : adj[cur])
      if (!used[e]) {
        next = e;
        break;
      }
    if (next >= 0) {
      used[next] = 1;
      --remaining;
      cur = g.edge(next).second;
      walk.push_back(cur);
    } else {
      auto hop = path_to(cur, [&](Vertex v) {
        for (EdgeId e : adj[v])
          if (!used[e]) return true;
        return false;
      });
      for (Vertex v : hop) walk.push_back(v);
      cur = walk.back();
    }
  }
  if (cur != entry) {
    auto hop = path_to(cur, [&](Vertex v) { return v == entry; });
    for (Vertex v : hop) walk.push_back(v);
  }
  walk.pop_back();  // closing vertex equals `entry`
  lasso.cycle = std::move(walk);
  return lasso;
}

}  // namespace aug
