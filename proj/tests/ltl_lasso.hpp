#pragma once

// Independent naive LTL evaluation of the assumption formulas and parity on an
// ultimately periodic play stem . cycle^omega. Test-only; shares nothing with
// the classifier it checks.

#include <algorithm>
#include <vector>

#include "core/game.hpp"

namespace aug::test {

struct LassoPlay {
  const GameGraph& g;
  std::vector<Vertex> seq;  // stem then cycle
  size_t loop;              // index where the cycle starts

  LassoPlay(const GameGraph& graph, const LassoWitness& w) : g(graph) {
    seq = w.stem;
    loop = seq.size();
    seq.insert(seq.end(), w.cycle.begin(), w.cycle.end());
  }

  Vertex at(size_t i) const {
    if (i < seq.size()) return seq[i];
    size_t cyc = seq.size() - loop;
    return seq[loop + (i - loop) % cyc];
  }
  // Enough positions to expose every tail behaviour twice over.
  size_t horizon() const { return seq.size() + 2 * (seq.size() - loop) + 2; }
  bool in_cycle_forever(size_t i) const { return i >= loop; }

  std::vector<Vertex> inf_vertices() const {
    std::vector<Vertex> vs(seq.begin() + loop, seq.end());
    return sorted_unique(std::move(vs));
  }
  std::vector<EdgeId> inf_edges() const {
    std::vector<EdgeId> es;
    size_t cyc = seq.size() - loop;
    for (size_t i = 0; i < cyc; ++i) {
      Vertex u = seq[loop + i];
      Vertex v = seq[loop + (i + 1) % cyc];
      es.push_back(*g.find_edge(u, v));
    }
    return sorted_unique(std::move(es));
  }
  EdgeId edge_at(size_t i) const { return *g.find_edge(at(i), at(i + 1)); }
};

inline bool ltl_holds_assumption(const LassoPlay& play, const Assumption& a) {
  const GameGraph& g = play.g;
  auto inf_v = play.inf_vertices();
  auto inf_e = play.inf_edges();
  auto vinf = [&](Vertex v) { return contains(inf_v, v); };
  auto einf = [&](EdgeId e) { return contains(inf_e, e); };

  switch (a.kind) {
    case Assumption::Kind::None:
      return true;
    case Assumption::Kind::LiveEdges:
      for (EdgeId e : a.edges)
        if (vinf(g.edge(e).first) && !einf(e)) return false;
      return true;
    case Assumption::Kind::CoLiveEdges:
      for (EdgeId e : a.edges)
        if (einf(e)) return false;
      return true;
    case Assumption::Kind::LiveGroups:
      for (const auto& h : a.groups) {
        bool trig = false, sat = false;
        for (EdgeId e : h) {
          trig = trig || vinf(g.edge(e).first);
          sat = sat || einf(e);
        }
        if (trig && !sat) return false;
      }
      return true;
    case Assumption::Kind::LiveCnfGroups:
      for (const auto& vc : a.cnf) {
        if (!vinf(vc.vertex)) continue;
        for (const auto& clause : vc.clauses) {
          bool sat = false;
          for (EdgeId e : clause) sat = sat || einf(e);
          if (!sat) return false;
        }
      }
      return true;
    case Assumption::Kind::PersistentLiveGroups: {
      // [] ([](S /\ psi_cont(C)) => <>T), with the disjunctive reading of
      // psi_cont: at a src(C) position the taken edge lies in C.
      for (const auto& grp : a.persistent) {
        std::vector<char> src_c(g.num_vertices(), 0);
        for (EdgeId e : grp.committed) src_c[g.edge(e).first] = 1;
        size_t n = play.horizon();
        for (size_t j = 0; j < n; ++j) {
          // Does the suffix from j satisfy [](S /\ psi_cont) /\ []!T ?
          // Positions j..j+n cover the whole tail behaviour.
          bool always = true;
          for (size_t i = j; i <= j + n; ++i) {
            Vertex v = play.at(i);
            if (!contains(grp.region, v)) { always = false; break; }
            if (contains(grp.target, v)) { always = false; break; }
            if (src_c[v] && !contains(grp.committed, play.edge_at(i))) { always = false; break; }
          }
          if (always) return false;  // violating suffix found
        }
      }
      return true;
    }
  }
  return true;
}

inline bool ltl_holds_objective(const LassoPlay& play, const Objective& o) {
  auto inf_v = play.inf_vertices();
  if (o.kind == Objective::Kind::Parity) {
    int best = -1;
    for (Vertex v : inf_v) best = std::max(best, o.priority[v]);
    return best >= 0 && best % 2 == 0;
  }
  if (o.kind == Objective::Kind::Rabin) {
    for (const auto& pair : o.pairs) {
      bool fin = false, avoid = false;
      for (Vertex v : pair.fin) fin = fin || contains(inf_v, v);
      for (Vertex v : pair.avoid) avoid = avoid || contains(inf_v, v);
      if (fin && !avoid) return true;
    }
    return false;
  }
  throw std::runtime_error("ltl oracle: tail objectives only");
}

// Winner of the lasso play in the augmented game: 0 iff (not psi) or Phi.
inline int ltl_winner(const GameGraph& g, const AugmentedGame& game, const LassoWitness& w) {
  LassoPlay play(g, w);
  bool psi = ltl_holds_assumption(play, game.assumption);
  bool phi = ltl_holds_objective(play, game.objective);
  return (!psi || phi) ? 0 : 1;
}

}  // namespace aug::test
