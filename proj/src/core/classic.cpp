#include "core/classic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "core/solver_core.hpp"

namespace aug {

namespace {

// Default move for a won vertex that needs no steering: first declared edge.
Vertex first_successor(const GameGraph& g, Vertex v, const Mask* alive = nullptr) {
  for (EdgeId e : g.out(v)) {
    Vertex w = g.edge(e).second;
    if (alive == nullptr || (*alive)[w]) return w;
  }
  return -1;
}

}  // namespace

SolveResult solve_reachability(const GameGraph& g, const std::vector<Vertex>& targets) {
  Attr a = attractor(g, 0, targets, nullptr);
  SolveResult r;
  r.winner.assign(g.num_vertices(), 1);
  r.strategy.assign(g.num_vertices(), -1);
  std::vector<char> is_target(g.num_vertices(), 0);
  for (Vertex v : targets) is_target[v] = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!a.in[v]) continue;
    r.winner[v] = 0;
    if (g.owner(v) != 0) continue;
    r.strategy[v] = is_target[v] ? first_successor(g, v) : a.strat[v];
    if (r.strategy[v] < 0 && !is_target[v])
      throw internal_error("attractor strategy missing");
  }
  return r;
}

RegionStrategy reach_or_safe_region(const GameGraph& g, const std::vector<char>& reach_set,
                                    const std::vector<char>& safe_set, const Mask* alive,
                                    const std::vector<char>* edge_ok) {
  const int n = g.num_vertices();
  auto is_alive = [&](Vertex v) { return alive == nullptr || (*alive)[v]; };
  auto usable = [&](EdgeId e) {
    return (edge_ok == nullptr || (*edge_ok)[e]) && is_alive(g.edge(e).second);
  };

  // attr_1 towards the unsafe region, with reach_set vertices absorbing
  // (they stand for the merged sink, which is safe).
  std::vector<char> bad(n, 0);
  std::vector<int> pending(n, 0);
  std::deque<Vertex> q;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_alive(v) || reach_set[v]) continue;
    if (g.owner(v) == 0) {
      int cnt = 0;
      for (EdgeId e : g.out(v))
        if (usable(e)) ++cnt;
      pending[v] = cnt;
    }
    if (!safe_set[v]) {
      bad[v] = 1;
      q.push_back(v);
    } else if (g.owner(v) == 0 && pending[v] == 0) {
      bad[v] = 1;  // stranded Player-0 vertex loses
      q.push_back(v);
    }
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (EdgeId e : g.in(v)) {
      if (edge_ok != nullptr && !(*edge_ok)[e]) continue;
      Vertex u = g.edge(e).first;
      if (!is_alive(u) || bad[u] || reach_set[u]) continue;
      if (g.owner(u) == 1) {
        bad[u] = 1;
        q.push_back(u);
      } else if (--pending[u] == 0) {
        bad[u] = 1;
        q.push_back(u);
      }
    }
  }

  RegionStrategy out;
  out.win.assign(n, 0);
  out.strat.assign(n, -1);
  for (Vertex v = 0; v < n; ++v)
    out.win[v] = is_alive(v) && !bad[v];
  for (Vertex v = 0; v < n; ++v) {
    if (!out.win[v] || g.owner(v) != 0 || reach_set[v]) continue;
    for (EdgeId e : g.out(v)) {
      if (!usable(e)) continue;
      Vertex w = g.edge(e).second;
      if (out.win[w]) {
        out.strat[v] = w;
        break;
      }
    }
    if (out.strat[v] < 0) throw internal_error("reach_or_safe: no safe move from won vertex");
  }
  return out;
}

SolveResult solve_reach_or_safe(const GameGraph& g, const std::vector<Vertex>& reach,
                                const std::vector<Vertex>& safe) {
  std::vector<char> a(g.num_vertices(), 0), s(g.num_vertices(), 0);
  for (Vertex v : reach) {
    if (v < 0 || v >= g.num_vertices()) throw semantic_error("reach_or_safe: unknown vertex");
    a[v] = 1;
  }
  for (Vertex v : safe) {
    if (v < 0 || v >= g.num_vertices()) throw semantic_error("reach_or_safe: unknown vertex");
    s[v] = 1;
  }
  RegionStrategy rs = reach_or_safe_region(g, a, s);
  SolveResult r;
  r.winner.assign(g.num_vertices(), 1);
  r.strategy.assign(g.num_vertices(), -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!rs.win[v]) continue;
    r.winner[v] = 0;
    if (g.owner(v) == 0) r.strategy[v] = a[v] ? first_successor(g, v) : rs.strat[v];
  }
  return r;
}

SolveResult solve_parity_zielonka(const GameGraph& g, const std::vector<int>& priority) {
  if (static_cast<int>(priority.size()) != g.num_vertices())
    throw usage_error("zielonka: every vertex needs a priority");
  ZielonkaOut z = zielonka_core(g, priority, {}, full_mask(g));
  SolveResult r;
  r.winner.assign(g.num_vertices(), 1);
  r.strategy = z.strat0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (z.w0[v]) r.winner[v] = 0;
  return r;
}

double ParysResult::bound() const {
  if (n <= 0) return 1.0;
  return std::pow(static_cast<double>(n), l) * std::pow(static_cast<double>(h + l), l);
}

ParysResult solve_parity_parys(const GameGraph& g, const std::vector<int>& priority) {
  if (static_cast<int>(priority.size()) != g.num_vertices())
    throw usage_error("parys: every vertex needs a priority");
  for (const auto& [u, v] : g.edges())
    if (u == v)
      throw usage_error("parys: self-loop at '" + g.name(u) +
                        "' (run split_self_loops first)");
  g.check_total();

  ParysResult out;
  out.n = g.num_vertices();
  int top = 0;
  for (int p : priority) top = std::max(top, p);
  out.h = top + (top % 2);
  out.l = out.n >= 1 ? 2 * static_cast<int>(std::floor(std::log2(out.n))) : 0;

  Mask w0 = qsolve_region_core(g, priority, {}, full_mask(g), 0, out.h, out.n, out.n, out.calls);

  out.result.winner.assign(g.num_vertices(), 1);
  out.result.strategy.assign(g.num_vertices(), -1);
  std::vector<Vertex> w0_verts = mask_vertices(w0);
  for (Vertex v : w0_verts) out.result.winner[v] = 0;
  if (!w0_verts.empty()) {
    // The region-only solver is paired with a Zielonka pass on W0 for the
    // strategy; the pass must confirm the region.
    ZielonkaOut z = zielonka_core(g, priority, {}, w0);
    for (Vertex v : w0_verts)
      if (!z.w0[v]) throw internal_error("parys region not confirmed by zielonka");
    out.result.strategy = z.strat0;
  }
  return out;
}

}  // namespace aug
