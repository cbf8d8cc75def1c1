#include "core/augmented.hpp"

#include <algorithm>
#include <cmath>

#include "core/classic.hpp"
#include "core/reductions.hpp"
#include "core/transform.hpp"

namespace aug {

namespace {

Vertex first_alive_successor(const GameGraph& g, Vertex v, const Mask& alive) {
  for (EdgeId e : g.out(v))
    if (alive[g.edge(e).second]) return g.edge(e).second;
  return -1;
}

int count_mask(const Mask& m) {
  int c = 0;
  for (char b : m) c += b;
  return c;
}

Mask mask_minus(const Mask& a, const Mask& b) {
  Mask r = a;
  for (size_t i = 0; i < r.size(); ++i)
    if (b[i]) r[i] = 0;
  return r;
}

}  // namespace

Attr attr_pers(const GameGraph& g, const std::vector<Vertex>& targets,
               const std::vector<PersistentLiveGroup>& groups, const Mask* alive_in) {
  Mask alive = alive_in ? *alive_in : full_mask(g);
  Attr out;
  out.in.assign(g.num_vertices(), 0);
  out.strat.assign(g.num_vertices(), -1);

  Mask target(g.num_vertices(), 0);
  for (Vertex v : targets) {
    if (v < 0 || v >= g.num_vertices()) throw semantic_error("attr_pers: unknown vertex in T");
    if (alive[v]) target[v] = 1;
  }

  // The recursive call of Alg. 2 only grows the target, so it unrolls into a
  // loop; strategy assignments of different rounds are disjoint.
  while (true) {
    Attr a = attractor(g, 0, mask_vertices(target), &alive);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (a.in[v] && !target[v] && g.owner(v) == 0 && out.strat[v] < 0) out.strat[v] = a.strat[v];

    bool extended = false;
    for (const auto& grp : groups) {
      // The group can only add vertices of S \ A (either they reach A through
      // committed moves or they violate the group by staying in S \ T). Note
      // this is weaker than the printed (S \ A) ∩ pre(A) test, which misses
      // regions that win by violation without touching A.
      bool worth = false;
      for (Vertex v : grp.region)
        if (alive[v] && !a.in[v]) worth = true;
      if (!worth) continue;

      std::vector<char> safe(g.num_vertices(), 0);
      for (Vertex v : grp.region)
        if (!contains(grp.target, v)) safe[v] = 1;
      auto edge_ok = control_edge_mask(g, grp.committed);
      RegionStrategy b = reach_or_safe_region(g, a.in, safe, &alive, &edge_ok);

      bool enlarges = false;
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (b.win[v] && !a.in[v]) enlarges = true;
      if (!enlarges) continue;

      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (b.win[v] && !a.in[v]) {
          if (g.owner(v) == 0 && out.strat[v] < 0) out.strat[v] = b.strat[v];
          target[v] = 1;
        }
        if (a.in[v]) target[v] = 1;
      }
      extended = true;
      break;  // first enlarging group triggers the recursion
    }

    if (!extended) {
      out.in = a.in;
      // Drop strategy entries outside the final region.
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!a.in[v]) out.strat[v] = -1;
      return out;
    }
  }
}

ZielonkaOut zielonka_core(const GameGraph& g, const std::vector<int>& priority,
                          const std::vector<PersistentLiveGroup>& groups, Mask alive,
                          const std::vector<char>* edge_ok) {
  if (!groups.empty() && edge_ok != nullptr)
    throw internal_error("zielonka_core: edge filter with persistent groups unsupported");

  ZielonkaOut out;
  out.w0.assign(g.num_vertices(), 0);
  out.strat0.assign(g.num_vertices(), -1);

  // Peel the stranding regions so the recursion below runs on a total graph.
  // With persistent groups Player 0 strands through attr_pers (an empty
  // target still wins where the assumption can be violated forever).
  {
    Attr s0 = groups.empty() ? attractor(g, 0, {}, &alive, edge_ok)
                             : attr_pers(g, {}, groups, &alive);
    Attr s1 = attractor(g, 1, {}, &alive, edge_ok);
    bool any = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (s0.in[v] || s1.in[v]) any = true;
    if (any) {
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (s0.in[v]) {
          out.w0[v] = 1;
          if (g.owner(v) == 0) {
            out.strat0[v] = s0.strat[v];
            if (out.strat0[v] < 0) {
              // Vertices inside the violation core: any alive move kept by
              // the region works; reuse the region's own closure.
              for (EdgeId e : g.out(v)) {
                Vertex w = g.edge(e).second;
                if (alive[w] && s0.in[w] && (edge_ok == nullptr || (*edge_ok)[e])) {
                  out.strat0[v] = w;
                  break;
                }
              }
            }
          }
        }
        if (s0.in[v] || s1.in[v]) alive[v] = 0;
      }
      auto rest_groups = groups.empty() ? groups : restrict_pers(groups, g, alive);
      ZielonkaOut sub = zielonka_core(g, priority, rest_groups, alive, edge_ok);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (sub.w0[v]) out.w0[v] = 1;
        if (sub.strat0[v] >= 0) out.strat0[v] = sub.strat0[v];
      }
      return out;
    }
  }

  std::vector<Vertex> verts = mask_vertices(alive);
  if (verts.empty()) return out;

  int top = 0;
  for (Vertex v : verts) top = std::max(top, priority[v]);
  int player = top % 2;

  std::vector<Vertex> n_top;
  for (Vertex v : verts)
    if (priority[v] == top) n_top.push_back(v);

  Attr a = (player == 0 && !groups.empty()) ? attr_pers(g, n_top, groups, &alive)
                                            : attractor(g, player, n_top, &alive, edge_ok);

  Mask sub_alive = mask_minus(alive, a.in);
  auto sub_groups = groups.empty() ? groups : restrict_pers(groups, g, sub_alive);
  ZielonkaOut sub = zielonka_core(g, priority, sub_groups, sub_alive, edge_ok);

  Mask opp_region(g.num_vertices(), 0);
  bool opp_empty = true;
  for (Vertex v : mask_vertices(sub_alive)) {
    bool won0 = sub.w0[v];
    if ((player == 0 && !won0) || (player == 1 && won0)) {
      opp_region[v] = 1;
      opp_empty = false;
    }
  }

  if (opp_empty) {
    for (Vertex v : verts) {
      if (player == 0) {
        out.w0[v] = 1;
        if (g.owner(v) != 0) continue;
        if (sub.strat0[v] >= 0)
          out.strat0[v] = sub.strat0[v];
        else if (a.in[v] && a.strat[v] >= 0)
          out.strat0[v] = a.strat[v];
        else
          out.strat0[v] = first_alive_successor(g, v, alive);  // top-priority vertices
      }
      // player == 1: whole subgame is lost for Player 0.
    }
    return out;
  }

  Attr b = (player == 1 && !groups.empty())
               ? attr_pers(g, mask_vertices(opp_region), groups, &alive)
               : attractor(g, 1 - player, mask_vertices(opp_region), &alive, edge_ok);
  Mask rest = mask_minus(alive, b.in);
  auto rest_groups = groups.empty() ? groups : restrict_pers(groups, g, rest);
  ZielonkaOut deep = zielonka_core(g, priority, rest_groups, rest, edge_ok);

  for (Vertex v : verts) {
    if (deep.w0[v]) out.w0[v] = 1;
    if (deep.strat0[v] >= 0) out.strat0[v] = deep.strat0[v];
  }
  if (player == 1) {
    // Player 0 additionally owns the whole attractor onto her subgame region.
    for (Vertex v : verts) {
      if (!b.in[v]) continue;
      out.w0[v] = 1;
      if (g.owner(v) != 0) continue;
      if (opp_region[v] && sub.strat0[v] >= 0)
        out.strat0[v] = sub.strat0[v];
      else if (!opp_region[v] && b.strat[v] >= 0)
        out.strat0[v] = b.strat[v];
      else if (out.strat0[v] < 0)
        out.strat0[v] = first_alive_successor(g, v, alive);
    }
  }
  return out;
}

Mask qsolve_region_core(const GameGraph& g, const std::vector<int>& priority,
                        const std::vector<PersistentLiveGroup>& groups, Mask alive, int player,
                        int h, long long p_self, long long p_opp, long long& calls) {
  std::vector<Vertex> verts = mask_vertices(alive);
  if (verts.empty() || p_self <= 1) return Mask(g.num_vertices(), 0);
  ++calls;

  auto attr_self = [&](const std::vector<Vertex>& t, const Mask& m) {
    return player == 0 ? attr_pers(g, t, restrict_pers(groups, g, m), &m).in
                       : attractor(g, 1, t, &m).in;
  };
  auto attr_opp = [&](const std::vector<Vertex>& t, const Mask& m) {
    return player == 1 ? attr_pers(g, t, restrict_pers(groups, g, m), &m).in
                       : attractor(g, 1, t, &m).in;
  };

  auto round = [&](long long opp_precision) {
    std::vector<Vertex> n_h;
    for (Vertex v : mask_vertices(alive))
      if (priority[v] == h) n_h.push_back(v);
    Mask head = attr_self(n_h, alive);
    Mask sub = mask_minus(alive, head);
    Mask w_opp = qsolve_region_core(g, priority, restrict_pers(groups, g, sub), sub, 1 - player,
                                    h - 1, opp_precision, p_self, calls);
    Mask strip = attr_opp(mask_vertices(w_opp), alive);
    alive = mask_minus(alive, strip);
    return count_mask(w_opp) > 0;
  };

  // Halved-precision rounds, one full-precision round, halved rounds again.
  while (round(p_opp / 2)) {
  }
  if (round(p_opp)) {
    while (round(p_opp / 2)) {
    }
  }
  return alive;
}

// ---- Alg. 1 ---------------------------------------------------------------

SolveResult solve_colive(const AugmentedGame& game) {
  if (game.assumption.kind != Assumption::Kind::CoLiveEdges)
    throw usage_error("solve_colive: assumption is not co-live edges");
  AugmentedGame tail = to_tail_objective(game);
  if (tail.objective.kind != Objective::Kind::Parity)
    throw usage_error("solve_colive: parity objective required");
  const GameGraph& g = tail.graph;

  std::vector<char> edge_ok(g.num_edges(), 1);
  for (EdgeId e : tail.assumption.edges) edge_ok[e] = 0;

  SolveResult r;
  r.winner.assign(g.num_vertices(), 1);
  r.strategy.assign(g.num_vertices(), -1);

  Mask alive = full_mask(g);
  while (true) {
    ZielonkaOut cur = zielonka_core(g, tail.objective.priority, {}, alive, &edge_ok);
    std::vector<Vertex> w1;
    for (Vertex v : mask_vertices(alive))
      if (!cur.w0[v]) w1.push_back(v);
    Attr a = attractor(g, 1, w1, &alive);  // co-live edges usable finitely often
    Mask b = mask_minus(alive, a.in);
    int b_count = count_mask(b);
    if (b_count == 0) return r;  // everything alive is lost
    if (b_count == count_mask(alive)) {
      for (Vertex v : mask_vertices(alive)) {
        r.winner[v] = 0;
        if (cur.strat0[v] >= 0) r.strategy[v] = cur.strat0[v];
      }
      return r;
    }
    alive = b;
  }
}

// ---- persistent live groups -------------------------------------------------

SolveResult solve_attr_pers(const AugmentedGame& game) {
  if (game.assumption.kind != Assumption::Kind::PersistentLiveGroups)
    throw usage_error("attr_pers: assumption is not persistent live groups");
  if (game.objective.kind != Objective::Kind::Reach)
    throw usage_error("attr_pers: reachability objective required");
  const GameGraph& g = game.graph;
  Attr a = attr_pers(g, game.objective.target, game.assumption.persistent);
  SolveResult r;
  r.winner.assign(g.num_vertices(), 1);
  r.strategy.assign(g.num_vertices(), -1);
  std::vector<char> is_target(g.num_vertices(), 0);
  for (Vertex v : game.objective.target) is_target[v] = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!a.in[v]) continue;
    r.winner[v] = 0;
    if (g.owner(v) != 0) continue;
    if (a.strat[v] >= 0)
      r.strategy[v] = a.strat[v];
    else {
      for (EdgeId e : g.out(v)) {
        Vertex w = g.edge(e).second;
        if (is_target[v] || a.in[w]) {
          r.strategy[v] = w;
          break;
        }
      }
      if (r.strategy[v] < 0) r.strategy[v] = g.out(v).empty() ? -1 : g.edge(g.out(v)[0]).second;
    }
  }
  return r;
}

SolveResult zielonka_pers(const GameGraph& g, const std::vector<int>& priority,
                          const std::vector<PersistentLiveGroup>& groups) {
  if (static_cast<int>(priority.size()) != g.num_vertices())
    throw usage_error("zielonka_pers: every vertex needs a priority");
  ZielonkaOut z = zielonka_core(g, priority, groups, full_mask(g));
  SolveResult r;
  r.winner.assign(g.num_vertices(), 1);
  r.strategy = z.strat0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (z.w0[v]) r.winner[v] = 0;
  return r;
}

double QSolveResult::bound() const {
  if (n <= 0) return 1.0;
  return std::pow(static_cast<double>(n), l) * std::pow(static_cast<double>(h + l), l);
}

QSolveResult qsolve_pers(const GameGraph& g, const std::vector<int>& priority,
                         const std::vector<PersistentLiveGroup>& groups) {
  if (static_cast<int>(priority.size()) != g.num_vertices())
    throw usage_error("qsolve_pers: every vertex needs a priority");
  g.check_total();
  SplitResult split = split_self_loops(g, priority, groups);

  QSolveResult out;
  out.n = split.graph.num_vertices();
  int top = 0;
  for (int p : split.priority) top = std::max(top, p);
  out.h = top + (top % 2);
  out.l = out.n >= 1 ? 2 * static_cast<int>(std::floor(std::log2(out.n))) : 0;

  Mask w0_split = qsolve_region_core(split.graph, split.priority, split.persistent,
                                     full_mask(split.graph), 0, out.h, out.n, out.n, out.calls);

  Mask w0(g.num_vertices(), 0);
  for (Vertex v = 0; v < split.graph.num_vertices(); ++v)
    if (w0_split[v] && split.back[v] >= 0) w0[split.back[v]] = 1;

  out.result.winner.assign(g.num_vertices(), 1);
  out.result.strategy.assign(g.num_vertices(), -1);
  std::vector<Vertex> won = mask_vertices(w0);
  for (Vertex v : won) out.result.winner[v] = 0;
  if (!won.empty()) {
    // Region-only core; the memoryless strategy comes from a zielonka_pers
    // pass confined to W0, which must confirm the region.
    auto confined_groups = restrict_pers(groups, g, w0);
    ZielonkaOut z = zielonka_core(g, priority, confined_groups, w0);
    for (Vertex v : won)
      if (!z.w0[v]) throw internal_error("qsolve region not confirmed by zielonka_pers");
    out.result.strategy = z.strat0;
  }
  return out;
}

// ---- dispatcher -------------------------------------------------------------

std::optional<Algo> algo_from_name(const std::string& name) {
  if (name == "auto") return Algo::Auto;
  if (name == "zielonka") return Algo::Zielonka;
  if (name == "parys") return Algo::Parys;
  if (name == "colive") return Algo::Colive;
  if (name == "attr-pers") return Algo::AttrPers;
  if (name == "zielonka-pers") return Algo::ZielonkaPers;
  if (name == "qsolve-pers") return Algo::QSolvePers;
  if (name == "oracle") return Algo::Oracle;
  if (name == "rabin-oracle") return Algo::RabinOracle;
  return std::nullopt;
}

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::Auto: return "auto";
    case Algo::Zielonka: return "zielonka";
    case Algo::Parys: return "parys";
    case Algo::Colive: return "colive";
    case Algo::AttrPers: return "attr-pers";
    case Algo::ZielonkaPers: return "zielonka-pers";
    case Algo::QSolvePers: return "qsolve-pers";
    case Algo::Oracle: return "oracle";
    case Algo::RabinOracle: return "rabin-oracle";
  }
  return "?";
}

namespace {

// Rewrites a (possibly parity-converted) strategy for the original
// reachability game: at target vertices any original move is fine (the sink
// self-loop of the conversion does not exist here), elsewhere converted edges
// coincide with original ones.
void complete_reach_strategy(const AugmentedGame& game, SolveResult& r) {
  if (game.objective.kind != Objective::Kind::Reach) return;
  const GameGraph& g = game.graph;
  for (Vertex v : game.objective.target)
    if (r.winner[v] == 0 && g.owner(v) == 0 && !g.out(v).empty())
      r.strategy[v] = g.edge(g.out(v)[0]).second;
}

// Attaches oracle-style lasso witnesses for lost vertices: the reported
// strategy is completed deterministically and beaten per vertex.
void attach_witnesses(const AugmentedGame& game, SolveResult& r) {
  AugmentedGame tail = to_tail_objective(game);
  const GameGraph& g = tail.graph;
  std::vector<char> edge_ok(g.num_edges(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.owner(v) == 1) {
      for (EdgeId e : g.out(v)) edge_ok[e] = 1;
      continue;
    }
    Vertex pick = v < static_cast<int>(r.strategy.size()) ? r.strategy[v] : -1;
    if (pick >= 0) {
      auto e = g.find_edge(v, pick);
      if (e) {
        edge_ok[*e] = 1;
        continue;
      }
    }
    if (!g.out(v).empty()) edge_ok[g.out(v)[0]] = 1;
  }
  SearchContext ctx{tail, edge_ok};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (r.winner[v] != 1) continue;
    auto p = find_p1_profile(ctx, v);
    if (p) r.witness[v] = lasso_of_profile(g, edge_ok, v, *p);
  }
}

DispatchResult from_parity_result(const AugmentedGame& original, SolveResult parity_result,
                                  std::string pipeline) {
  DispatchResult d;
  d.result = std::move(parity_result);
  d.pipeline = std::move(pipeline);
  complete_reach_strategy(original, d.result);
  return d;
}

// Solves the live-edge family by its reduction chain: CNF and singleton
// groups collapse to live edges, everything lands in the Rabin encoding, and
// the oracle decides the Rabin game.
DispatchResult solve_live_family(const AugmentedGame& game, const SolveOptions& opts) {
  AugmentedGame tail = to_tail_objective(game);
  std::string pipeline;
  if (game.objective.kind == Objective::Kind::Reach) pipeline += "reach_to_parity|";

  AugmentedGame chain = tail;
  if (chain.assumption.kind == Assumption::Kind::LiveCnfGroups) {
    chain = cnf_to_live_edges(chain).game;
    pipeline += "cnf_to_live_edges|";
  } else if (chain.assumption.kind == Assumption::Kind::LiveGroups) {
    bool all_singleton = true;
    for (const auto& h : chain.assumption.groups) {
      std::vector<Vertex> srcs;
      for (EdgeId e : h) srcs.push_back(chain.graph.edge(e).first);
      if (sorted_unique(srcs).size() > 1) all_singleton = false;
    }
    if (all_singleton && !chain.assumption.groups.empty()) {
      chain = singleton_groups_to_live_edges(chain).game;
      pipeline += "singleton_groups_to_live_edges|";
    }
  }

  RabinReduction rabin = to_rabin(chain);
  pipeline += "to_rabin|oracle";
  SolveResult rr = oracle_solve(rabin.game, opts.limits, false, opts.jobs);

  DispatchResult d;
  d.pipeline = pipeline;
  d.result.winner.assign(game.graph.num_vertices(), 1);
  d.result.strategy.assign(game.graph.num_vertices(), -1);
  const GameGraph& rg = rabin.game.graph;
  for (Vertex v = 0; v < rg.num_vertices(); ++v) {
    auto orig = game.graph.find_vertex(rg.name(v));
    if (!orig) continue;
    d.result.winner[*orig] = rr.winner[v];
    if (rr.winner[v] == 0 && rg.owner(v) == 0 && rr.strategy[v] >= 0) {
      // Successor in the Rabin game is an edge-vertex; step once more.
      Vertex ev = rr.strategy[v];
      Vertex tgt = rg.edge(rg.out(ev)[0]).second;
      auto ot = game.graph.find_vertex(rg.name(tgt));
      if (ot) d.result.strategy[*orig] = *ot;
    }
  }
  complete_reach_strategy(game, d.result);
  if (opts.want_witness) attach_witnesses(game, d.result);
  return d;
}

}  // namespace

DispatchResult solve_augmented(const AugmentedGame& game, const SolveOptions& opts) {
  validate_game(game, ValidateOptions{true});
  const Assumption::Kind kind = game.assumption.kind;
  Algo algo = opts.algo;

  if (algo == Algo::Auto) {
    switch (kind) {
      case Assumption::Kind::None:
        algo = game.objective.kind == Objective::Kind::Rabin ? Algo::Oracle : Algo::Zielonka;
        break;
      case Assumption::Kind::CoLiveEdges:
        algo = Algo::Colive;
        break;
      case Assumption::Kind::PersistentLiveGroups:
        algo = game.objective.kind == Objective::Kind::Reach ? Algo::AttrPers : Algo::QSolvePers;
        break;
      case Assumption::Kind::LiveEdges:
      case Assumption::Kind::LiveGroups:
      case Assumption::Kind::LiveCnfGroups:
        algo = Algo::RabinOracle;
        break;
    }
  }

  auto need = [&](bool ok, const char* msg) {
    if (!ok) throw usage_error(std::string("algo ") + algo_name(algo) + ": " + msg);
  };

  DispatchResult d;
  switch (algo) {
    case Algo::Auto:
      throw internal_error("unresolved auto algo");
    case Algo::Zielonka: {
      need(kind == Assumption::Kind::None, "requires an assumption-free game");
      if (game.objective.kind == Objective::Kind::Reach) {
        d.result = solve_reachability(game.graph, game.objective.target);
        d.pipeline = "reachability";
        complete_reach_strategy(game, d.result);
      } else {
        need(game.objective.kind == Objective::Kind::Parity, "parity objective required");
        d = from_parity_result(game, solve_parity_zielonka(game.graph, game.objective.priority),
                               "zielonka");
      }
      break;
    }
    case Algo::Parys: {
      need(kind == Assumption::Kind::None, "requires an assumption-free game");
      AugmentedGame tail = to_tail_objective(game);
      need(tail.objective.kind == Objective::Kind::Parity, "parity objective required");
      SplitResult split =
          split_self_loops(tail.graph, tail.objective.priority, {});
      ParysResult pr = solve_parity_parys(split.graph, split.priority);
      SolveResult mapped;
      mapped.winner.assign(game.graph.num_vertices(), 1);
      mapped.strategy.assign(game.graph.num_vertices(), -1);
      for (Vertex v = 0; v < split.graph.num_vertices(); ++v) {
        if (split.back[v] < 0) continue;
        mapped.winner[split.back[v]] = pr.result.winner[v];
        Vertex s = pr.result.strategy[v];
        if (s >= 0) mapped.strategy[split.back[v]] = split.back[s] >= 0 ? split.back[s] : split.back[v];
      }
      d = from_parity_result(game, std::move(mapped), "split_self_loops|parys");
      d.qsolve_calls = pr.calls;
      d.qsolve_n = pr.n;
      d.qsolve_h = pr.h;
      d.qsolve_l = pr.l;
      break;
    }
    case Algo::Colive: {
      need(kind == Assumption::Kind::CoLiveEdges, "requires co-live edges");
      d = from_parity_result(game, solve_colive(game),
                             game.objective.kind == Objective::Kind::Reach
                                 ? "reach_to_parity|solve_colive"
                                 : "solve_colive");
      break;
    }
    case Algo::AttrPers: {
      need(kind == Assumption::Kind::PersistentLiveGroups, "requires persistent live groups");
      need(game.objective.kind == Objective::Kind::Reach, "reachability objective required");
      d.result = solve_attr_pers(game);
      d.pipeline = "attr_pers";
      complete_reach_strategy(game, d.result);
      break;
    }
    case Algo::ZielonkaPers: {
      need(kind == Assumption::Kind::PersistentLiveGroups, "requires persistent live groups");
      AugmentedGame tail = to_tail_objective(game);
      need(tail.objective.kind == Objective::Kind::Parity, "parity objective required");
      d = from_parity_result(
          game,
          zielonka_pers(tail.graph, tail.objective.priority, tail.assumption.persistent),
          game.objective.kind == Objective::Kind::Reach ? "reach_to_parity|zielonka_pers"
                                                        : "zielonka_pers");
      break;
    }
    case Algo::QSolvePers: {
      need(kind == Assumption::Kind::PersistentLiveGroups, "requires persistent live groups");
      AugmentedGame tail = to_tail_objective(game);
      need(tail.objective.kind == Objective::Kind::Parity, "parity objective required");
      QSolveResult qr =
          qsolve_pers(tail.graph, tail.objective.priority, tail.assumption.persistent);
      d = from_parity_result(game, std::move(qr.result),
                             game.objective.kind == Objective::Kind::Reach
                                 ? "reach_to_parity|qsolve_pers"
                                 : "qsolve_pers");
      d.qsolve_calls = qr.calls;
      d.qsolve_n = qr.n;
      d.qsolve_h = qr.h;
      d.qsolve_l = qr.l;
      break;
    }
    case Algo::Oracle: {
      AugmentedGame tail = to_tail_objective(game);
      d.result = oracle_solve(tail, opts.limits, opts.want_witness, opts.jobs);
      d.pipeline = game.objective.kind == Objective::Kind::Reach ? "reach_to_parity|oracle"
                                                                 : "oracle";
      complete_reach_strategy(game, d.result);
      break;
    }
    case Algo::RabinOracle: {
      need(kind == Assumption::Kind::LiveEdges || kind == Assumption::Kind::LiveGroups ||
               kind == Assumption::Kind::LiveCnfGroups || kind == Assumption::Kind::None ||
               kind == Assumption::Kind::CoLiveEdges,
           "persistent groups have no Rabin encoding here");
      d = solve_live_family(game, opts);
      break;
    }
  }

  if (opts.want_witness && d.result.witness.empty()) attach_witnesses(game, d.result);
  return d;
}

}  // namespace aug
