#include "core/reductions.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace aug {

RabinReduction to_rabin(const AugmentedGame& game) {
  if (game.objective.kind != Objective::Kind::Parity)
    throw usage_error("to_rabin: parity objective required");
  const Assumption::Kind kind = game.assumption.kind;
  if (kind == Assumption::Kind::PersistentLiveGroups)
    throw usage_error("to_rabin: persistent live groups have no Rabin encoding here");
  if (kind == Assumption::Kind::LiveCnfGroups)
    throw usage_error("to_rabin: convert live CNF groups to live groups first");
  const GameGraph& g = game.graph;

  RabinReduction out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out.game.graph.add_vertex(g.name(v), g.owner(v));
    out.back.push_back(v);
  }
  out.edge_vertex.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    Vertex ev = out.game.graph.add_vertex("e[" + g.name(u) + ">" + g.name(v) + "]", 1);
    out.back.push_back(-1);
    out.edge_vertex[e] = ev;
    out.game.graph.add_edge(u, ev);
    out.game.graph.add_edge(ev, v);
  }
  out.game.graph.set_allow_dead_ends(g.allow_dead_ends());
  out.game.name = game.name + "-rabin";
  if (game.init) out.game.init = *game.init;

  std::vector<RabinPair> pairs;
  auto group_pair = [&](const std::vector<EdgeId>& h) {
    RabinPair p;
    std::vector<Vertex> srcs;
    for (EdgeId e : h) {
      srcs.push_back(g.edge(e).first);
      p.avoid.push_back(out.edge_vertex[e]);
    }
    p.fin = sorted_unique(std::move(srcs));
    p.avoid = sorted_unique(std::move(p.avoid));
    return p;
  };
  switch (kind) {
    case Assumption::Kind::None:
      break;
    case Assumption::Kind::LiveEdges:
      for (EdgeId e : game.assumption.edges) pairs.push_back(group_pair({e}));
      break;
    case Assumption::Kind::CoLiveEdges:
      for (EdgeId e : game.assumption.edges)
        pairs.push_back(RabinPair{{out.edge_vertex[e]}, {}});
      break;
    case Assumption::Kind::LiveGroups:
      for (const auto& h : game.assumption.groups) pairs.push_back(group_pair(h));
      break;
    default:
      break;
  }
  out.assumption_pairs = pairs.size();

  int d = 0;
  for (int p : game.objective.priority) d = std::max(d, p);
  for (int even = 0; even <= d; even += 2) {
    RabinPair p;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (game.objective.priority[v] == even) p.fin.push_back(v);
      if (game.objective.priority[v] > even) p.avoid.push_back(v);
    }
    pairs.push_back(std::move(p));
    ++out.parity_pairs;
  }

  out.game.objective = Objective::rabin(std::move(pairs));
  out.game.assumption = Assumption::none();
  return out;
}

GadgetReduction singleton_groups_to_live_edges(const AugmentedGame& game) {
  if (game.assumption.kind != Assumption::Kind::LiveGroups)
    throw usage_error("singleton elimination: live groups required");
  const GameGraph& g = game.graph;
  for (const auto& h : game.assumption.groups) {
    std::vector<Vertex> srcs;
    for (EdgeId e : h) srcs.push_back(g.edge(e).first);
    if (sorted_unique(srcs).size() != 1)
      throw usage_error("singleton elimination: group with several source vertices");
  }

  GadgetReduction out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out.game.graph.add_vertex(g.name(v), g.owner(v));
    out.back.push_back(v);
  }
  out.game.graph.set_allow_dead_ends(g.allow_dead_ends());
  out.game.name = game.name + "-lified";
  out.game.init = game.init;

  std::vector<char> replaced(g.num_edges(), 0);
  for (const auto& h : game.assumption.groups)
    for (EdgeId e : h) replaced[e] = 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!replaced[e]) out.game.graph.add_edge(g.edge(e).first, g.edge(e).second);

  std::vector<int> prio;
  if (game.objective.kind == Objective::Kind::Parity) prio = game.objective.priority;

  std::vector<EdgeId> live;
  for (size_t i = 0; i < game.assumption.groups.size(); ++i) {
    const auto& h = game.assumption.groups[i];
    Vertex a = g.edge(h[0]).first;
    Vertex gadget =
        out.game.graph.add_vertex(g.name(a) + "'H" + std::to_string(i + 1), 1);
    out.back.push_back(-1);
    if (!prio.empty()) prio.push_back(0);
    live.push_back(out.game.graph.add_edge(a, gadget));
    for (EdgeId e : h) out.game.graph.add_edge(gadget, g.edge(e).second);
  }

  out.game.assumption = Assumption::live_edges(std::move(live));
  if (game.objective.kind == Objective::Kind::Parity)
    out.game.objective = Objective::parity(std::move(prio));
  else
    out.game.objective = game.objective;
  return out;
}

GadgetReduction cnf_to_live_edges(const AugmentedGame& game) {
  if (game.assumption.kind != Assumption::Kind::LiveCnfGroups)
    throw usage_error("cnf elimination: live CNF groups required");
  const GameGraph& g = game.graph;
  for (const auto& vc : game.assumption.cnf)
    for (const auto& clause : vc.clauses)
      for (EdgeId e : clause)
        if (g.edge(e).first != vc.vertex)
          throw semantic_error("cnf elimination: literal not outgoing from its vertex");

  GadgetReduction out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out.game.graph.add_vertex(g.name(v), g.owner(v));
    out.back.push_back(v);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    out.game.graph.add_edge(g.edge(e).first, g.edge(e).second);
  out.game.name = game.name + "-clived";
  out.game.init = game.init;

  std::vector<int> prio;
  if (game.objective.kind == Objective::Kind::Parity) prio = game.objective.priority;

  bool dead_ends = g.allow_dead_ends();
  std::vector<EdgeId> live;
  for (const auto& vc : game.assumption.cnf) {
    for (size_t i = 0; i < vc.clauses.size(); ++i) {
      Vertex gadget = out.game.graph.add_vertex(
          g.name(vc.vertex) + "'c" + std::to_string(i + 1), 1);
      out.back.push_back(-1);
      if (!prio.empty()) prio.push_back(0);
      live.push_back(out.game.graph.add_edge(vc.vertex, gadget));
      for (EdgeId e : vc.clauses[i]) out.game.graph.add_edge(gadget, g.edge(e).second);
      if (vc.clauses[i].empty()) dead_ends = true;  // constant-false clause
    }
  }
  out.game.graph.set_allow_dead_ends(dead_ends);

  out.game.assumption = Assumption::live_edges(std::move(live));
  if (game.objective.kind == Objective::Kind::Parity)
    out.game.objective = Objective::parity(std::move(prio));
  else
    out.game.objective = game.objective;
  return out;
}

AugmentedGame sat_to_game(const CnfFormula& formula) {
  if (formula.clauses.empty()) throw usage_error("sat_to_game: formula has no clauses");
  if (formula.vars < 1) throw usage_error("sat_to_game: formula has no variables");
  for (const auto& clause : formula.clauses) {
    if (clause.empty()) throw usage_error("sat_to_game: empty clause");
    std::set<int> distinct(clause.begin(), clause.end());
    if (distinct.size() > 3) throw usage_error("sat_to_game: clause with more than 3 literals");
  }

  AugmentedGame game;
  game.name = "sat";
  GameGraph& g = game.graph;
  const int m = formula.vars;
  const int k = static_cast<int>(formula.clauses.size());

  Vertex hub = g.add_vertex("v0", 1);
  std::vector<Vertex> clause_v;
  for (int i = 1; i <= k; ++i) clause_v.push_back(g.add_vertex("C" + std::to_string(i), 0));
  std::vector<Vertex> lit(m + 1), nlit(m + 1), litp(m + 1), nlitp(m + 1);
  for (int i = 1; i <= m; ++i) {
    lit[i] = g.add_vertex("x" + std::to_string(i), 1);
    nlit[i] = g.add_vertex("nx" + std::to_string(i), 1);
    litp[i] = g.add_vertex("x" + std::to_string(i) + "p", 1);
    nlitp[i] = g.add_vertex("nx" + std::to_string(i) + "p", 1);
  }
  Vertex goal = g.add_vertex("goal", 0);

  for (int i = 0; i < k; ++i) g.add_edge(hub, clause_v[i]);
  for (int i = 0; i < k; ++i) {
    std::vector<int> seen;
    for (int l : formula.clauses[i]) {
      if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;  // set semantics
      seen.push_back(l);
      g.add_edge(clause_v[i], l > 0 ? lit[l] : nlit[-l]);
    }
  }
  std::vector<EdgeId> to_goal_pos(m + 1), to_goal_neg(m + 1), back_pos(m + 1), back_neg(m + 1);
  for (int i = 1; i <= m; ++i) {
    to_goal_pos[i] = g.add_edge(lit[i], goal);
    g.add_edge(lit[i], litp[i]);
    to_goal_neg[i] = g.add_edge(nlit[i], goal);
    g.add_edge(nlit[i], nlitp[i]);
    back_pos[i] = g.add_edge(litp[i], hub);
    back_neg[i] = g.add_edge(nlitp[i], hub);
  }
  g.add_edge(goal, goal);

  std::vector<std::vector<EdgeId>> groups;
  for (int i = 1; i <= m; ++i) {
    groups.push_back({to_goal_pos[i], back_neg[i]});  // H_i^1 = {(x_i, goal), (nx'_i, v0)}
    groups.push_back({to_goal_neg[i], back_pos[i]});  // H_i^2 = {(nx_i, goal), (x'_i, v0)}
  }

  game.objective = Objective::reach({goal});
  game.assumption = Assumption::live_groups(std::move(groups));
  game.init = hub;
  return game;
}

GadgetReduction make_alternating(const AugmentedGame& game) {
  const GameGraph& g = game.graph;
  GadgetReduction out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out.game.graph.add_vertex(g.name(v), g.owner(v));
    out.back.push_back(v);
  }
  out.game.graph.set_allow_dead_ends(g.allow_dead_ends());
  out.game.name = game.name + "-alt";
  out.game.init = game.init;

  std::vector<int> prio;
  if (game.objective.kind == Objective::Kind::Parity) prio = game.objective.priority;

  std::vector<EdgeId> first_half(g.num_edges(), -1);  // replacement (u, relay) edge
  std::vector<EdgeId> edge_map(g.num_edges(), -1);
  std::vector<Vertex> relay_of(g.num_edges(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (g.owner(u) != g.owner(v)) {
      edge_map[e] = out.game.graph.add_edge(u, v);
      continue;
    }
    Vertex relay =
        out.game.graph.add_vertex(g.name(u) + ">" + g.name(v) + "'r", 1 - g.owner(u));
    out.back.push_back(-1);
    if (!prio.empty()) prio.push_back(0);
    relay_of[e] = relay;
    first_half[e] = out.game.graph.add_edge(u, relay);
    out.game.graph.add_edge(relay, v);
  }

  auto map_edge = [&](EdgeId e) { return edge_map[e] >= 0 ? edge_map[e] : first_half[e]; };

  const Assumption& a = game.assumption;
  Assumption& b = out.game.assumption;
  b.kind = a.kind;
  switch (a.kind) {
    case Assumption::Kind::None:
      break;
    case Assumption::Kind::LiveEdges:
    case Assumption::Kind::CoLiveEdges:
      for (EdgeId e : a.edges) b.edges.push_back(map_edge(e));
      b.edges = sorted_unique(std::move(b.edges));
      break;
    case Assumption::Kind::LiveGroups:
      for (const auto& h : a.groups) {
        std::vector<EdgeId> hh;
        for (EdgeId e : h) hh.push_back(map_edge(e));
        b.groups.push_back(sorted_unique(std::move(hh)));
      }
      break;
    case Assumption::Kind::PersistentLiveGroups:
      for (const auto& p : a.persistent) {
        PersistentLiveGroup q;
        q.region = p.region;
        q.target = p.target;
        for (EdgeId e : p.committed) q.committed.push_back(map_edge(e));
        // A relay sits inside S exactly when both endpoints of its edge do.
        std::vector<char> in_s(g.num_vertices(), 0);
        for (Vertex v : p.region) in_s[v] = 1;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
          if (relay_of[e] >= 0 && in_s[g.edge(e).first] && in_s[g.edge(e).second])
            q.region.push_back(relay_of[e]);
        q.region = sorted_unique(std::move(q.region));
        q.committed = sorted_unique(std::move(q.committed));
        b.persistent.push_back(std::move(q));
      }
      break;
    case Assumption::Kind::LiveCnfGroups:
      for (const auto& vc : a.cnf) {
        VertexCnf out_vc;
        out_vc.vertex = vc.vertex;
        for (const auto& clause : vc.clauses) {
          CnfClause c;
          for (EdgeId e : clause) c.push_back(map_edge(e));
          out_vc.clauses.push_back(std::move(c));
        }
        b.cnf.push_back(std::move(out_vc));
      }
      break;
  }

  if (game.objective.kind == Objective::Kind::Parity)
    out.game.objective = Objective::parity(std::move(prio));
  else
    out.game.objective = game.objective;  // relays are never targets
  return out;
}

ProductResult product(const ProductInput& spec, const ProductInput& plant) {
  const GameGraph& g1 = spec.graph.graph;
  const GameGraph& g2 = plant.graph.graph;
  if (!spec.graph.is_alternating() || !plant.graph.is_alternating())
    throw usage_error("product: both inputs must be alternating");
  if (g1.owner(spec.graph.init) != 1 || g2.owner(plant.graph.init) != 1)
    throw usage_error("product: both initial vertices must belong to Player 1");
  if (!spec.objective) throw usage_error("product: the first input needs an objective");

  auto sym1 = [&](EdgeId e) { return spec.graph.alphabet[spec.graph.label[e]]; };
  auto sym2 = [&](EdgeId e) { return plant.graph.alphabet[plant.graph.label[e]]; };

  ProductResult out;
  GameGraph& pg = out.game.graph;
  std::map<std::pair<Vertex, Vertex>, Vertex> index;
  std::deque<std::pair<Vertex, Vertex>> queue;

  auto intern = [&](Vertex a, Vertex b) {
    auto key = std::make_pair(a, b);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    Vertex v = pg.add_vertex(g1.name(a) + "." + g2.name(b), g1.owner(a));
    out.back.push_back(key);
    index[key] = v;
    queue.push_back(key);
    return v;
  };

  intern(spec.graph.init, plant.graph.init);
  // Product edges annotated with the plant edge they synchronize on.
  std::vector<EdgeId> plant_edge_of;
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    Vertex from = index[{a, b}];
    for (EdgeId e1 : g1.out(a))
      for (EdgeId e2 : g2.out(b)) {
        if (sym1(e1) != sym2(e2)) continue;
        Vertex to = intern(g1.edge(e1).second, g2.edge(e2).second);
        int before = pg.num_edges();
        pg.add_edge(from, to);
        if (pg.num_edges() > before) plant_edge_of.push_back(e2);
      }
  }
  if (pg.out(0).empty())
    throw usage_error("product: label mismatch leaves the initial vertex with no move");
  bool dead = false;
  for (Vertex v = 0; v < pg.num_vertices(); ++v)
    if (pg.out(v).empty()) dead = true;
  pg.set_allow_dead_ends(dead);

  std::vector<std::vector<EdgeId>> groups;
  for (EdgeId live : plant.live_edges) {
    std::vector<EdgeId> h;
    for (EdgeId pe = 0; pe < pg.num_edges(); ++pe)
      if (plant_edge_of[pe] == live) h.push_back(pe);
    if (!h.empty()) groups.push_back(std::move(h));
  }
  out.game.assumption = Assumption::live_groups(std::move(groups));

  const Objective& o = *spec.objective;
  if (o.kind == Objective::Kind::Reach) {
    std::vector<Vertex> t;
    for (Vertex v = 0; v < pg.num_vertices(); ++v)
      if (contains(o.target, out.back[v].first)) t.push_back(v);
    out.game.objective = Objective::reach(std::move(t));
  } else if (o.kind == Objective::Kind::Parity) {
    std::vector<int> prio(pg.num_vertices());
    for (Vertex v = 0; v < pg.num_vertices(); ++v) prio[v] = o.priority[out.back[v].first];
    out.game.objective = Objective::parity(std::move(prio));
  } else {
    throw usage_error("product: reach or parity objective required");
  }
  out.game.init = 0;
  out.game.name = "product";
  return out;
}

DecomposeResult decompose(const AugmentedGame& game) {
  if (game.assumption.kind != Assumption::Kind::LiveGroups)
    throw usage_error("decompose: live groups required");
  if (!game.init) throw usage_error("decompose: initial vertex required");

  // Groups must be edge-disjoint for the labeling; overlapping edges are
  // pre-split through relay pairs that keep the game alternating.
  AugmentedGame work = game;
  std::vector<Vertex> back(game.graph.num_vertices());
  for (Vertex v = 0; v < game.graph.num_vertices(); ++v) back[v] = v;
  {
    std::map<EdgeId, std::vector<size_t>> owners;
    for (size_t i = 0; i < game.assumption.groups.size(); ++i)
      for (EdgeId e : game.assumption.groups[i]) owners[e].push_back(i);
    bool overlap = false;
    for (const auto& [e, gs] : owners)
      if (gs.size() > 1) overlap = true;
    if (overlap) {
      const GameGraph& g = game.graph;
      AugmentedGame split;
      split.name = game.name;
      split.init = game.init;
      back.clear();
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        split.graph.add_vertex(g.name(v), g.owner(v));
        back.push_back(v);
      }
      std::vector<int> prio;
      if (game.objective.kind == Objective::Kind::Parity) prio = game.objective.priority;
      std::vector<EdgeId> edge_map(g.num_edges());
      std::vector<std::vector<EdgeId>> groups(game.assumption.groups.size());
      for (EdgeId e = 0; e < g.num_edges(); ++e)
        edge_map[e] = split.graph.add_edge(g.edge(e).first, g.edge(e).second);
      for (size_t i = 0; i < game.assumption.groups.size(); ++i) {
        for (EdgeId e : game.assumption.groups[i]) {
          if (owners[e].front() == i) {
            groups[i].push_back(edge_map[e]);
            continue;
          }
          auto [u, v] = g.edge(e);
          std::string base = g.name(u) + ">" + g.name(v) + "'g" + std::to_string(i + 1);
          Vertex r1 = split.graph.add_vertex(base + "a", 1 - g.owner(u));
          Vertex r2 = split.graph.add_vertex(base + "b", g.owner(u));
          back.push_back(-1);
          back.push_back(-1);
          if (!prio.empty()) {
            prio.push_back(0);
            prio.push_back(0);
          }
          groups[i].push_back(split.graph.add_edge(u, r1));
          split.graph.add_edge(r1, r2);
          split.graph.add_edge(r2, v);
        }
      }
      split.objective = game.objective.kind == Objective::Kind::Parity
                            ? Objective::parity(std::move(prio))
                            : game.objective;
      split.assumption = Assumption::live_groups(std::move(groups));
      work = std::move(split);
    }
  }

  const GameGraph& g = work.graph;
  for (const auto& [u, v] : g.edges())
    if (g.owner(u) == g.owner(v)) throw usage_error("decompose: game must be alternating");
  if (g.owner(*work.init) != 1)
    throw usage_error("decompose: initial vertex must belong to Player 1");

  DecomposeResult out;
  out.spec_back = back;
  const size_t m = work.assumption.groups.size();

  // kappa^1: group edges get h_i, everything else the shared letter.
  out.spec_graph.graph = g;
  out.spec_graph.init = *work.init;
  out.spec_graph.alphabet.push_back("a");
  for (size_t i = 1; i <= m; ++i) out.spec_graph.alphabet.push_back("h" + std::to_string(i));
  out.spec_graph.label.assign(g.num_edges(), 0);
  for (size_t i = 0; i < m; ++i)
    for (EdgeId e : work.assumption.groups[i]) out.spec_graph.label[e] = static_cast<int>(i + 1);
  out.spec_objective = work.objective;

  // The hub of size m+1 (plus the idle vertex): u0 <-> u_*, u0 <-> x_i.
  GameGraph& hub = out.plant_graph.graph;
  Vertex u0 = hub.add_vertex("u0", 1);
  Vertex idle = hub.add_vertex("ustar", 0);
  out.plant_graph.alphabet = out.spec_graph.alphabet;
  out.plant_graph.init = u0;
  std::vector<int> labels;
  hub.add_edge(u0, idle);
  labels.push_back(0);
  hub.add_edge(idle, u0);
  labels.push_back(0);
  for (size_t i = 1; i <= m; ++i) {
    Vertex x = hub.add_vertex("x" + std::to_string(i), 0);
    out.plant_live_edges.push_back(hub.add_edge(u0, x));
    labels.push_back(static_cast<int>(i));
    hub.add_edge(x, u0);
    labels.push_back(0);
  }
  out.plant_graph.label = std::move(labels);
  return out;
}

}  // namespace aug
