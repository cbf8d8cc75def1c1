#include "core/transform.hpp"

#include <algorithm>

namespace aug {

AugmentedGame reach_to_parity(const AugmentedGame& game) {
  if (game.objective.kind != Objective::Kind::Reach)
    throw usage_error("reach_to_parity: objective is not reachability");
  const GameGraph& g = game.graph;
  std::vector<char> is_target(g.num_vertices(), 0);
  for (Vertex v : game.objective.target) is_target[v] = 1;

  AugmentedGame out;
  out.name = game.name;
  out.init = game.init;
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.graph.add_vertex(g.name(v), g.owner(v));
  out.graph.set_allow_dead_ends(g.allow_dead_ends());

  // Old edge id -> new edge id (-1 when dropped by sink-ification).
  std::vector<EdgeId> edge_map(g.num_edges(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (is_target[u]) continue;
    edge_map[e] = out.graph.add_edge(u, v);
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (is_target[v]) out.graph.add_edge(v, v);

  std::vector<int> prio(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) prio[v] = is_target[v] ? 2 : 1;
  out.objective = Objective::parity(std::move(prio));

  const Assumption& a = game.assumption;
  Assumption& b = out.assumption;
  b.kind = a.kind;
  auto map_edges = [&](const std::vector<EdgeId>& es) {
    std::vector<EdgeId> r;
    for (EdgeId e : es)
      if (edge_map[e] >= 0) r.push_back(edge_map[e]);
    return r;
  };
  switch (a.kind) {
    case Assumption::Kind::None:
      break;
    case Assumption::Kind::LiveEdges:
    case Assumption::Kind::CoLiveEdges:
      b.edges = map_edges(a.edges);
      break;
    case Assumption::Kind::LiveGroups:
      for (const auto& h : a.groups) {
        auto hh = map_edges(h);
        if (!hh.empty()) b.groups.push_back(std::move(hh));
      }
      break;
    case Assumption::Kind::PersistentLiveGroups:
      for (const auto& p : a.persistent) {
        PersistentLiveGroup q;
        q.region = p.region;
        q.target = p.target;
        q.committed = map_edges(p.committed);
        b.persistent.push_back(std::move(q));
      }
      break;
    case Assumption::Kind::LiveCnfGroups:
      for (const auto& vc : a.cnf) {
        VertexCnf out_vc;
        out_vc.vertex = vc.vertex;
        bool became_false = false;
        for (const auto& clause : vc.clauses) {
          CnfClause c = map_edges(clause);
          if (c.empty() && !clause.empty()) became_false = true;
          out_vc.clauses.push_back(std::move(c));
        }
        if (became_false) out_vc.clauses = {CnfClause{}};
        b.cnf.push_back(std::move(out_vc));
      }
      break;
  }
  return out;
}

AugmentedGame to_tail_objective(const AugmentedGame& game) {
  if (game.objective.kind == Objective::Kind::Reach) return reach_to_parity(game);
  return game;
}

SplitResult split_self_loops(const GameGraph& g, const std::vector<int>& priority,
                             const std::vector<PersistentLiveGroup>& persistent) {
  if (static_cast<int>(priority.size()) != g.num_vertices())
    throw usage_error("split_self_loops: parity objective required");
  SplitResult r;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    r.graph.add_vertex(g.name(v), g.owner(v));
    r.priority.push_back(priority[v]);
    r.back.push_back(v);
  }
  r.graph.set_allow_dead_ends(g.allow_dead_ends());

  std::vector<Vertex> loop_relay(g.num_vertices(), -1);
  std::vector<EdgeId> first_half(g.num_vertices(), -1);  // (u, u_e) edge for looped u
  std::vector<EdgeId> edge_map(g.num_edges(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (u != v) {
      edge_map[e] = r.graph.add_edge(u, v);
      continue;
    }
    Vertex relay = r.graph.add_vertex(g.name(u) + "'loop", 1 - g.owner(u));
    r.priority.push_back(0);
    r.back.push_back(-1);
    loop_relay[u] = relay;
    first_half[u] = r.graph.add_edge(u, relay);
    r.graph.add_edge(relay, u);
  }

  for (const auto& p : persistent) {
    PersistentLiveGroup q;
    q.region = p.region;
    q.target = p.target;
    for (Vertex v : p.region)
      if (loop_relay[v] >= 0) q.region.push_back(loop_relay[v]);
    for (Vertex v : p.target)
      if (loop_relay[v] >= 0) q.target.push_back(loop_relay[v]);
    for (EdgeId e : p.committed) {
      auto [u, v] = g.edge(e);
      q.committed.push_back(u == v ? first_half[u] : edge_map[e]);
    }
    q.region = sorted_unique(std::move(q.region));
    q.target = sorted_unique(std::move(q.target));
    q.committed = sorted_unique(std::move(q.committed));
    r.persistent.push_back(std::move(q));
  }
  return r;
}

}  // namespace aug
