#include "core/attractor.hpp"

#include <algorithm>
#include <deque>

namespace aug {

Mask full_mask(const GameGraph& g) { return Mask(g.num_vertices(), 1); }

std::vector<Vertex> mask_vertices(const Mask& m) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < static_cast<int>(m.size()); ++v)
    if (m[v]) vs.push_back(v);
  return vs;
}

std::vector<Vertex> pre(const GameGraph& g, const std::vector<Vertex>& targets) {
  auto t = sorted_unique(targets);
  for (Vertex v : t)
    if (v < 0 || v >= g.num_vertices()) throw semantic_error("pre: unknown vertex in T");
  std::vector<char> hit(g.num_vertices(), 0);
  for (Vertex v : t)
    for (EdgeId e : g.in(v)) hit[g.edge(e).first] = 1;
  return mask_vertices(hit);
}

Attr attractor(const GameGraph& g, int player, const std::vector<Vertex>& targets,
               const Mask* alive, const std::vector<char>* edge_ok) {
  const int n = g.num_vertices();
  Attr a;
  a.in.assign(n, 0);
  a.strat.assign(n, -1);

  auto is_alive = [&](Vertex v) { return alive == nullptr || (*alive)[v]; };
  auto usable = [&](EdgeId e) {
    return (edge_ok == nullptr || (*edge_ok)[e]) && is_alive(g.edge(e).second);
  };

  // Opponent vertices fall in once all their usable edges do.
  std::vector<int> pending(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!is_alive(v) || g.owner(v) == player) continue;
    int cnt = 0;
    for (EdgeId e : g.out(v))
      if (usable(e)) ++cnt;
    pending[v] = cnt;
  }

  std::deque<Vertex> queue;
  for (Vertex v : sorted_unique(targets)) {
    if (v < 0 || v >= n) throw semantic_error("attractor: unknown vertex in T");
    if (!is_alive(v) || a.in[v]) continue;
    a.in[v] = 1;
    queue.push_back(v);
  }
  // Opponent dead-ends join vacuously (owner loses when stranded).
  for (Vertex v = 0; v < n; ++v)
    if (is_alive(v) && !a.in[v] && g.owner(v) != player && pending[v] == 0) {
      a.in[v] = 1;
      queue.push_back(v);
    }

  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.in(v)) {
      Vertex u = g.edge(e).first;
      if (edge_ok != nullptr && !(*edge_ok)[e]) continue;
      if (!is_alive(u) || a.in[u]) continue;
      if (g.owner(u) == player) {
        a.in[u] = 1;
        a.strat[u] = v;
        queue.push_back(u);
      } else if (--pending[u] == 0) {
        a.in[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return a;
}

GameGraph restrict_graph(const GameGraph& g, const std::vector<Vertex>& keep) {
  auto ks = sorted_unique(keep);
  for (Vertex v : ks)
    if (v < 0 || v >= g.num_vertices()) throw semantic_error("restrict: unknown vertex");
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : ks) in[v] = 1;
  GameGraph r;
  for (Vertex v : ks) r.add_vertex(g.name(v), g.owner(v));
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) r.add_edge(g.name(u), g.name(v));
  r.set_allow_dead_ends(true);
  return r;
}

std::vector<char> control_edge_mask(const GameGraph& g, const std::vector<EdgeId>& committed) {
  std::vector<char> src_committed(g.num_vertices(), 0);
  std::vector<char> in_c(g.num_edges(), 0);
  for (EdgeId e : committed) {
    if (e < 0 || e >= g.num_edges()) throw semantic_error("restrict_control: unknown edge");
    if (g.owner(g.edge(e).first) != 0)
      throw semantic_error("restrict_control: C must contain controller edges only");
    in_c[e] = 1;
    src_committed[g.edge(e).first] = 1;
  }
  std::vector<char> keep(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    keep[e] = in_c[e] || !src_committed[g.edge(e).first];
  return keep;
}

GameGraph restrict_control(const GameGraph& g, const std::vector<EdgeId>& committed) {
  auto keep = control_edge_mask(g, committed);
  GameGraph r;
  for (Vertex v = 0; v < g.num_vertices(); ++v) r.add_vertex(g.name(v), g.owner(v));
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (keep[e]) r.add_edge(g.edge(e).first, g.edge(e).second);
  r.set_allow_dead_ends(g.allow_dead_ends());
  return r;
}

std::vector<PersistentLiveGroup> restrict_pers(const std::vector<PersistentLiveGroup>& groups,
                                               const GameGraph& g, const Mask& keep) {
  std::vector<PersistentLiveGroup> out;
  out.reserve(groups.size());
  for (const auto& p : groups) {
    PersistentLiveGroup q;
    for (Vertex v : p.target)
      if (keep[v]) q.target.push_back(v);
    std::vector<char> src_c(g.num_vertices(), 0), src_cu(g.num_vertices(), 0);
    for (EdgeId e : p.committed) {
      auto [u, v] = g.edge(e);
      src_c[u] = 1;
      if (keep[u] && keep[v]) {
        q.committed.push_back(e);
        src_cu[u] = 1;
      }
    }
    for (Vertex v : p.region)
      if (keep[v] && !(src_c[v] && !src_cu[v])) q.region.push_back(v);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<PersistentLiveGroup> restrict_pers(const std::vector<PersistentLiveGroup>& groups,
                                               const GameGraph& g,
                                               const std::vector<Vertex>& keep) {
  Mask m(g.num_vertices(), 0);
  for (Vertex v : keep) {
    if (v < 0 || v >= g.num_vertices()) throw semantic_error("restrict_pers: unknown vertex");
    m[v] = 1;
  }
  return restrict_pers(groups, g, m);
}

Assumption restrict_assumption(const Assumption& a, const GameGraph& g,
                               const std::vector<Vertex>& keep, const GameGraph& restricted) {
  Mask m(g.num_vertices(), 0);
  for (Vertex v : keep) m[v] = 1;
  auto map_edge = [&](EdgeId e) -> std::optional<EdgeId> {
    auto [u, v] = g.edge(e);
    if (!m[u] || !m[v]) return std::nullopt;
    return restricted.find_edge(restricted.vertex(g.name(u)), restricted.vertex(g.name(v)));
  };
  Assumption r;
  r.kind = a.kind;
  switch (a.kind) {
    case Assumption::Kind::None:
      break;
    case Assumption::Kind::LiveEdges:
    case Assumption::Kind::CoLiveEdges:
      for (EdgeId e : a.edges)
        if (auto me = map_edge(e)) r.edges.push_back(*me);
      break;
    case Assumption::Kind::LiveGroups:
      for (const auto& h : a.groups) {
        std::vector<EdgeId> hh;
        for (EdgeId e : h)
          if (auto me = map_edge(e)) hh.push_back(*me);
        r.groups.push_back(sorted_unique(std::move(hh)));
      }
      break;
    case Assumption::Kind::PersistentLiveGroups: {
      auto rp = restrict_pers(a.persistent, g, m);
      for (const auto& p : rp) {
        PersistentLiveGroup q;
        for (Vertex v : p.region) q.region.push_back(restricted.vertex(g.name(v)));
        for (Vertex v : p.target) q.target.push_back(restricted.vertex(g.name(v)));
        for (EdgeId e : p.committed) q.committed.push_back(*map_edge(e));
        q.region = sorted_unique(std::move(q.region));
        q.target = sorted_unique(std::move(q.target));
        q.committed = sorted_unique(std::move(q.committed));
        r.persistent.push_back(std::move(q));
      }
      break;
    }
    case Assumption::Kind::LiveCnfGroups:
      for (const auto& vc : a.cnf) {
        if (!m[vc.vertex]) continue;
        VertexCnf out;
        out.vertex = restricted.vertex(g.name(vc.vertex));
        for (const auto& clause : vc.clauses) {
          CnfClause c;
          for (EdgeId e : clause)
            if (auto me = map_edge(e)) c.push_back(*me);
          out.clauses.push_back(std::move(c));
        }
        r.cnf.push_back(std::move(out));
      }
      break;
  }
  return r;
}

}  // namespace aug
