#include "core/game.hpp"

#include <algorithm>

namespace aug {

int GameGraph::add_vertex(const std::string& name, int owner) {
  if (index_.count(name))
    throw semantic_error("duplicate vertex '" + name + "'");
  if (owner != 0 && owner != 1)
    throw semantic_error("vertex '" + name + "': owner must be 0 or 1");
  int v = static_cast<int>(names_.size());
  names_.push_back(name);
  owner_.push_back(owner);
  index_[name] = v;
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

EdgeId GameGraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || u >= num_vertices() || v < 0 || v >= num_vertices())
    throw semantic_error("edge endpoint out of range");
  auto key = std::make_pair(u, v);
  auto it = edge_index_.find(key);
  if (it != edge_index_.end()) return it->second;  // edges are a set
  EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.push_back(key);
  edge_index_[key] = e;
  out_[u].push_back(e);
  in_[v].push_back(e);
  return e;
}

EdgeId GameGraph::add_edge(const std::string& u, const std::string& v) {
  return add_edge(vertex(u), vertex(v));
}

Vertex GameGraph::vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw semantic_error("unknown vertex '" + name + "'");
  return it->second;
}

std::optional<Vertex> GameGraph::find_vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> GameGraph::find_edge(Vertex u, Vertex v) const {
  auto it = edge_index_.find(std::make_pair(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

void GameGraph::check_total() const {
  if (allow_dead_ends_) return;
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (out_[v].empty())
      throw semantic_error("vertex '" + names_[v] +
                           "' has no outgoing edge (graph not flagged for dead-ends)");
}

Objective Objective::reach(std::vector<Vertex> t) {
  Objective o;
  o.kind = Kind::Reach;
  o.target = sorted_unique(std::move(t));
  return o;
}

Objective Objective::parity(std::vector<int> prio) {
  Objective o;
  o.kind = Kind::Parity;
  o.priority = std::move(prio);
  return o;
}

Objective Objective::rabin(std::vector<RabinPair> pairs) {
  Objective o;
  o.kind = Kind::Rabin;
  o.pairs = std::move(pairs);
  return o;
}

Assumption Assumption::none() { return Assumption{}; }

Assumption Assumption::live_edges(std::vector<EdgeId> e) {
  Assumption a;
  a.kind = Kind::LiveEdges;
  a.edges = sorted_unique(std::move(e));
  return a;
}

Assumption Assumption::colive_edges(std::vector<EdgeId> e) {
  Assumption a;
  a.kind = Kind::CoLiveEdges;
  a.edges = sorted_unique(std::move(e));
  return a;
}

Assumption Assumption::live_groups(std::vector<std::vector<EdgeId>> g) {
  Assumption a;
  a.kind = Kind::LiveGroups;
  a.groups = std::move(g);
  for (auto& h : a.groups) h = sorted_unique(std::move(h));
  return a;
}

Assumption Assumption::persistent_groups(std::vector<PersistentLiveGroup> g) {
  Assumption a;
  a.kind = Kind::PersistentLiveGroups;
  a.persistent = std::move(g);
  for (auto& p : a.persistent) {
    p.region = sorted_unique(std::move(p.region));
    p.committed = sorted_unique(std::move(p.committed));
    p.target = sorted_unique(std::move(p.target));
  }
  return a;
}

Assumption Assumption::cnf_groups(std::vector<VertexCnf> f) {
  Assumption a;
  a.kind = Kind::LiveCnfGroups;
  a.cnf = std::move(f);
  return a;
}

const char* assumption_kind_name(Assumption::Kind k) {
  switch (k) {
    case Assumption::Kind::None: return "none";
    case Assumption::Kind::LiveEdges: return "live";
    case Assumption::Kind::CoLiveEdges: return "colive";
    case Assumption::Kind::LiveGroups: return "group";
    case Assumption::Kind::PersistentLiveGroups: return "pers";
    case Assumption::Kind::LiveCnfGroups: return "cnf";
  }
  return "?";
}

int LabeledGameGraph::symbol(const std::string& s) const {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == s) return static_cast<int>(i);
  return -1;
}

bool LabeledGameGraph::is_alternating() const {
  for (const auto& [u, v] : graph.edges())
    if (graph.owner(u) == graph.owner(v)) return false;
  return true;
}

namespace {

void check_edges_in_e1(const GameGraph& g, const std::vector<EdgeId>& es, const char* what,
                       bool allow_p0) {
  for (EdgeId e : es) {
    if (e < 0 || e >= g.num_edges()) throw semantic_error(std::string(what) + ": unknown edge");
    if (!allow_p0 && g.owner(g.edge(e).first) != 1)
      throw semantic_error(std::string(what) + " edge (" + g.name(g.edge(e).first) + "," +
                           g.name(g.edge(e).second) +
                           ") is not an environment edge (use --allow-p0-assumption-edges)");
  }
}

}  // namespace

void validate_game(const AugmentedGame& game, const ValidateOptions& opts) {
  const GameGraph& g = game.graph;
  if (g.num_vertices() == 0) throw semantic_error("no vertices");
  g.check_total();

  switch (game.objective.kind) {
    case Objective::Kind::Reach:
      for (Vertex v : game.objective.target)
        if (v < 0 || v >= g.num_vertices()) throw semantic_error("reach target out of range");
      break;
    case Objective::Kind::Parity:
      if (static_cast<int>(game.objective.priority.size()) != g.num_vertices())
        throw semantic_error("parity objective: every vertex needs a priority");
      for (int p : game.objective.priority)
        if (p < 0) throw semantic_error("negative priority");
      break;
    case Objective::Kind::Rabin:
      for (const auto& pair : game.objective.pairs)
        for (Vertex v : pair.fin)
          if (v < 0 || v >= g.num_vertices()) throw semantic_error("rabin pair out of range");
      break;
  }

  const Assumption& a = game.assumption;
  bool allow_p0 = opts.allow_p0_assumption_edges;
  switch (a.kind) {
    case Assumption::Kind::None:
      break;
    case Assumption::Kind::LiveEdges:
      check_edges_in_e1(g, a.edges, "live", allow_p0);
      break;
    case Assumption::Kind::CoLiveEdges:
      check_edges_in_e1(g, a.edges, "colive", allow_p0);
      break;
    case Assumption::Kind::LiveGroups:
      for (const auto& h : a.groups) check_edges_in_e1(g, h, "group", allow_p0);
      break;
    case Assumption::Kind::PersistentLiveGroups:
      for (const auto& p : a.persistent) {
        for (Vertex v : p.region)
          if (v < 0 || v >= g.num_vertices()) throw semantic_error("pers S out of range");
        for (Vertex v : p.target) {
          if (v < 0 || v >= g.num_vertices()) throw semantic_error("pers T out of range");
          if (!contains(p.region, v))
            throw semantic_error("pers group: T must be a subset of S");
        }
        for (EdgeId e : p.committed) {
          if (e < 0 || e >= g.num_edges()) throw semantic_error("pers C: unknown edge");
          if (g.owner(g.edge(e).first) != 0)
            throw semantic_error("pers C edge (" + g.name(g.edge(e).first) + "," +
                                 g.name(g.edge(e).second) + ") is not a controller edge");
        }
      }
      break;
    case Assumption::Kind::LiveCnfGroups:
      for (const auto& vc : a.cnf) {
        if (vc.vertex < 0 || vc.vertex >= g.num_vertices())
          throw semantic_error("cnf: unknown vertex");
        for (const auto& clause : vc.clauses)
          for (EdgeId e : clause) {
            if (e < 0 || e >= g.num_edges()) throw semantic_error("cnf: unknown edge");
            if (g.edge(e).first != vc.vertex)
              throw semantic_error("cnf literal (" + g.name(g.edge(e).first) + "," +
                                   g.name(g.edge(e).second) + ") is not an outgoing edge of " +
                                   g.name(vc.vertex));
            if (!allow_p0 && g.owner(vc.vertex) != 1)
              throw semantic_error("cnf vertex " + g.name(vc.vertex) +
                                   " is not an environment vertex "
                                   "(use --allow-p0-assumption-edges)");
          }
      }
      break;
  }

  if (game.init && (*game.init < 0 || *game.init >= g.num_vertices()))
    throw semantic_error("init vertex out of range");
}

std::vector<Vertex> SolveResult::region(int player) const {
  std::vector<Vertex> r;
  for (Vertex v = 0; v < static_cast<int>(winner.size()); ++v)
    if (winner[v] == player) r.push_back(v);
  return r;
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool contains(const std::vector<int>& sorted_xs, int x) {
  return std::binary_search(sorted_xs.begin(), sorted_xs.end(), x);
}

}  // namespace aug
