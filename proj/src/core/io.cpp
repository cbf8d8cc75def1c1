#include "core/io.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace aug {

bool GameDoc::labeled() const {
  for (const auto& l : edge_label)
    if (l) return true;
  return false;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  int line;

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error("line " + std::to_string(line) + ", col " + std::to_string(i + 1) + ": " +
                      msg);
  }
  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::strchr(" \t(){},|&", s[i]) == nullptr) ++i;
    if (i == start) fail("expected identifier");
    return s.substr(start, i - start);
  }
};

std::pair<std::string, std::string> parse_pair(Cursor& c) {
  c.expect('(');
  std::string u = c.ident();
  c.expect(',');
  std::string v = c.ident();
  c.expect(')');
  return {u, v};
}

std::vector<std::string> parse_name_set(Cursor& c) {
  c.expect('{');
  std::vector<std::string> out;
  if (!c.eat('}')) {
    out.push_back(c.ident());
    while (c.eat(',')) out.push_back(c.ident());
    c.expect('}');
  }
  return out;
}

// `S=`-style tags: ident() keeps '=' inside the token.
std::string parse_tag(Cursor& c) {
  std::string tag = c.ident();
  if (!tag.empty() && tag.back() == '=') {
    tag.pop_back();
    return tag;
  }
  c.expect('=');
  return tag;
}

std::vector<std::pair<std::string, std::string>> parse_pair_set(Cursor& c) {
  c.expect('{');
  std::vector<std::pair<std::string, std::string>> out;
  if (!c.eat('}')) {
    out.push_back(parse_pair(c));
    while (c.eat(',')) out.push_back(parse_pair(c));
    c.expect('}');
  }
  return out;
}

}  // namespace

GameDoc parse_game(const std::string& text, const ParseOptions& opts) {
  GameDoc doc;
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
      while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r'))
        raw.pop_back();
      size_t start = raw.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      lines.emplace_back(no, raw.substr(start));
    }
  }

  bool saw_objective = false;
  bool in_rabin = false;
  std::vector<RabinPair> rabin_pairs;
  std::vector<Vertex> reach_targets;
  Objective::Kind objective_kind = Objective::Kind::Reach;
  std::optional<std::string> init_name;
  std::map<std::string, std::vector<std::pair<int, std::string>>> pending_groups;
  std::vector<std::string> group_order;

  auto err = [](int line, const std::string& msg) -> Error {
    return parse_error("line " + std::to_string(line) + ": " + msg);
  };
  auto set_kind = [&](int line, Assumption::Kind k) {
    if (doc.assumption.kind != Assumption::Kind::None && doc.assumption.kind != k)
      throw err(line, "multiple assumption classes in one game");
    doc.assumption.kind = k;
  };

  for (const auto& [no, line] : lines) {
    Cursor c{line, 0, no};
    std::string head = c.ident();

    if (head == "game") {
      doc.name = c.ident();
    } else if (head == "deadends") {
      doc.graph.set_allow_dead_ends(true);
    } else if (head == "init") {
      init_name = c.ident();
    } else if (head == "vertex") {
      std::string id = c.ident();
      std::string attr = c.ident();
      if (attr.rfind("owner=", 0) != 0) throw err(no, "expected owner=0|1");
      int owner = attr == "owner=0" ? 0 : attr == "owner=1" ? 1 : -1;
      if (owner < 0) throw err(no, "owner must be 0 or 1");
      try {
        doc.graph.add_vertex(id, owner);
      } catch (const Error& e) {
        throw err(no, e.what());
      }
      doc.vertex_priority.push_back(std::nullopt);
      if (!c.done()) {
        std::string p = c.ident();
        if (p.rfind("priority=", 0) != 0) throw err(no, "expected priority=K");
        try {
          doc.vertex_priority.back() = std::stoi(p.substr(9));
        } catch (...) {
          throw err(no, "bad priority value");
        }
        if (*doc.vertex_priority.back() < 0) throw err(no, "negative priority");
      }
    } else if (head == "edge") {
      std::string u = c.ident(), v = c.ident();
      if (!doc.graph.find_vertex(u)) throw err(no, "unknown vertex '" + u + "'");
      if (!doc.graph.find_vertex(v)) throw err(no, "unknown vertex '" + v + "'");
      int before = doc.graph.num_edges();
      doc.graph.add_edge(u, v);
      if (doc.graph.num_edges() > before) doc.edge_label.push_back(std::nullopt);
    } else if (head == "objective") {
      if (saw_objective) throw err(no, "duplicate objective");
      saw_objective = true;
      std::string kind = c.ident();
      if (kind == "reach") {
        objective_kind = Objective::Kind::Reach;
        while (!c.done()) {
          std::string v = c.ident();
          if (!doc.graph.find_vertex(v)) throw err(no, "unknown vertex '" + v + "'");
          reach_targets.push_back(doc.graph.vertex(v));
        }
      } else if (kind == "parity") {
        objective_kind = Objective::Kind::Parity;
      } else if (kind == "rabin") {
        objective_kind = Objective::Kind::Rabin;
        in_rabin = true;
      } else {
        throw err(no, "objective must be reach, parity or rabin");
      }
    } else if (head == "pair") {
      if (!in_rabin) throw err(no, "pair outside rabin objective");
      c.skip_ws();
      RabinPair pair;
      if (parse_tag(c) != "F") throw err(no, "expected F={...}");
      for (const auto& nm : parse_name_set(c)) {
        if (!doc.graph.find_vertex(nm)) throw err(no, "unknown vertex '" + nm + "'");
        pair.fin.push_back(doc.graph.vertex(nm));
      }
      if (parse_tag(c) != "R") throw err(no, "expected R={...}");
      for (const auto& nm : parse_name_set(c)) {
        if (!doc.graph.find_vertex(nm)) throw err(no, "unknown vertex '" + nm + "'");
        pair.avoid.push_back(doc.graph.vertex(nm));
      }
      pair.fin = sorted_unique(std::move(pair.fin));
      pair.avoid = sorted_unique(std::move(pair.avoid));
      rabin_pairs.push_back(std::move(pair));
    } else if (head == "assume") {
      std::string kind = c.ident();
      auto edge_of = [&](const std::pair<std::string, std::string>& p) {
        if (!doc.graph.find_vertex(p.first)) throw err(no, "unknown vertex '" + p.first + "'");
        if (!doc.graph.find_vertex(p.second)) throw err(no, "unknown vertex '" + p.second + "'");
        auto e = doc.graph.find_edge(doc.graph.vertex(p.first), doc.graph.vertex(p.second));
        if (!e) throw err(no, "unknown edge (" + p.first + "," + p.second + ")");
        return *e;
      };
      if (kind == "live" || kind == "colive") {
        set_kind(no, kind == "live" ? Assumption::Kind::LiveEdges
                                    : Assumption::Kind::CoLiveEdges);
        doc.assumption.edges.push_back(edge_of(parse_pair(c)));
      } else if (kind == "group") {
        set_kind(no, Assumption::Kind::LiveGroups);
        std::string gid = c.ident();
        std::vector<EdgeId> edges;
        while (!c.done()) edges.push_back(edge_of(parse_pair(c)));
        if (edges.empty()) throw err(no, "empty live group");
        if (!pending_groups.count(gid)) group_order.push_back(gid);
        for (EdgeId e : edges) pending_groups[gid].emplace_back(e, gid);
      } else if (kind == "pers") {
        set_kind(no, Assumption::Kind::PersistentLiveGroups);
        c.ident();  // group id, informational
        PersistentLiveGroup p;
        for (int part = 0; part < 3; ++part) {
          std::string tag = parse_tag(c);
          if (tag == "S") {
            for (const auto& nm : parse_name_set(c)) {
              if (!doc.graph.find_vertex(nm)) throw err(no, "unknown vertex '" + nm + "'");
              p.region.push_back(doc.graph.vertex(nm));
            }
          } else if (tag == "C") {
            for (const auto& pr : parse_pair_set(c)) p.committed.push_back(edge_of(pr));
          } else if (tag == "T") {
            for (const auto& nm : parse_name_set(c)) {
              if (!doc.graph.find_vertex(nm)) throw err(no, "unknown vertex '" + nm + "'");
              p.target.push_back(doc.graph.vertex(nm));
            }
          } else {
            throw err(no, "expected S=, C= or T=");
          }
        }
        p.region = sorted_unique(std::move(p.region));
        p.committed = sorted_unique(std::move(p.committed));
        p.target = sorted_unique(std::move(p.target));
        doc.assumption.persistent.push_back(std::move(p));
      } else if (kind == "cnf") {
        set_kind(no, Assumption::Kind::LiveCnfGroups);
        std::string vname = c.ident();
        if (!doc.graph.find_vertex(vname)) throw err(no, "unknown vertex '" + vname + "'");
        VertexCnf vc;
        vc.vertex = doc.graph.vertex(vname);
        do {
          c.expect('(');
          CnfClause clause;
          clause.push_back(edge_of(parse_pair(c)));
          while (c.eat('|')) clause.push_back(edge_of(parse_pair(c)));
          c.expect(')');
          vc.clauses.push_back(std::move(clause));
        } while (c.eat('&'));
        doc.assumption.cnf.push_back(std::move(vc));
      } else {
        if (kind == "cogroup")
          throw err(no, "co-live groups collapse to co-live edges; declare them as 'assume colive'");
        throw err(no, "unknown assumption class '" + kind + "'");
      }
    } else if (head == "label") {
      Cursor& cc = c;
      auto pr = parse_pair(cc);
      std::string sym = cc.ident();
      if (!doc.graph.find_vertex(pr.first) || !doc.graph.find_vertex(pr.second))
        throw err(no, "unknown vertex in label");
      auto e = doc.graph.find_edge(doc.graph.vertex(pr.first), doc.graph.vertex(pr.second));
      if (!e) throw err(no, "unknown edge in label");
      int idx = -1;
      for (size_t i = 0; i < doc.alphabet.size(); ++i)
        if (doc.alphabet[i] == sym) idx = static_cast<int>(i);
      if (idx < 0) {
        idx = static_cast<int>(doc.alphabet.size());
        doc.alphabet.push_back(sym);
      }
      doc.edge_label[*e] = idx;
    } else {
      throw err(no, "unknown directive '" + head + "'");
    }
    if (!c.done()) throw err(no, "trailing input after directive");
  }

  if (doc.graph.num_vertices() == 0) throw parse_error("no vertices");
  for (const auto& gid : group_order) {
    std::vector<EdgeId> h;
    for (const auto& [e, _] : pending_groups[gid]) h.push_back(e);
    doc.assumption.groups.push_back(sorted_unique(std::move(h)));
  }
  doc.assumption.edges = sorted_unique(std::move(doc.assumption.edges));

  if (init_name) {
    if (!doc.graph.find_vertex(*init_name))
      throw parse_error("init: unknown vertex '" + *init_name + "'");
    doc.init = doc.graph.vertex(*init_name);
  }

  if (saw_objective) {
    switch (objective_kind) {
      case Objective::Kind::Reach:
        doc.objective = Objective::reach(std::move(reach_targets));
        break;
      case Objective::Kind::Parity: {
        std::vector<int> prio(doc.graph.num_vertices());
        for (Vertex v = 0; v < doc.graph.num_vertices(); ++v) {
          if (!doc.vertex_priority[v])
            throw parse_error("parity objective: vertex '" + doc.graph.name(v) +
                              "' has no priority");
          prio[v] = *doc.vertex_priority[v];
        }
        doc.objective = Objective::parity(std::move(prio));
        break;
      }
      case Objective::Kind::Rabin:
        doc.objective = Objective::rabin(std::move(rabin_pairs));
        break;
    }
  }

  // Label completeness: a labeled document labels every edge.
  if (doc.labeled()) {
    for (EdgeId e = 0; e < doc.graph.num_edges(); ++e)
      if (!doc.edge_label[e])
        throw parse_error("edge (" + doc.graph.name(doc.graph.edge(e).first) + "," +
                          doc.graph.name(doc.graph.edge(e).second) + ") has no label");
  }

  if (doc.objective) {
    AugmentedGame game = to_augmented(doc);
    ValidateOptions vo;
    vo.allow_p0_assumption_edges = opts.allow_p0_assumption_edges;
    validate_game(game, vo);
  } else {
    doc.graph.check_total();
    ValidateOptions vo;
    vo.allow_p0_assumption_edges = opts.allow_p0_assumption_edges;
    AugmentedGame shell;
    shell.graph = doc.graph;
    shell.objective = Objective::reach({});
    shell.assumption = doc.assumption;
    shell.init = doc.init;
    validate_game(shell, vo);
  }
  return doc;
}

AugmentedGame to_augmented(const GameDoc& doc) {
  if (!doc.objective) throw semantic_error("document has no objective");
  AugmentedGame g;
  g.name = doc.name;
  g.graph = doc.graph;
  g.objective = *doc.objective;
  g.assumption = doc.assumption;
  g.init = doc.init;
  return g;
}

LabeledGameGraph to_labeled(const GameDoc& doc) {
  if (!doc.labeled()) throw semantic_error("document has no labels");
  if (!doc.init) throw semantic_error("labeled game needs an init vertex");
  LabeledGameGraph lg;
  lg.graph = doc.graph;
  lg.alphabet = doc.alphabet;
  lg.init = *doc.init;
  lg.label.resize(doc.graph.num_edges());
  for (EdgeId e = 0; e < doc.graph.num_edges(); ++e) lg.label[e] = *doc.edge_label[e];
  return lg;
}

GameDoc doc_of_augmented(const AugmentedGame& game) {
  GameDoc doc;
  doc.name = game.name;
  doc.graph = game.graph;
  doc.objective = game.objective;
  doc.assumption = game.assumption;
  doc.init = game.init;
  doc.edge_label.assign(game.graph.num_edges(), std::nullopt);
  doc.vertex_priority.assign(game.graph.num_vertices(), std::nullopt);
  if (game.objective.kind == Objective::Kind::Parity)
    for (Vertex v = 0; v < game.graph.num_vertices(); ++v)
      doc.vertex_priority[v] = game.objective.priority[v];
  return doc;
}

GameDoc doc_of_labeled(const LabeledGameGraph& lg, const std::optional<Objective>& objective,
                       const Assumption& assumption, const std::string& name) {
  GameDoc doc;
  doc.name = name;
  doc.graph = lg.graph;
  doc.objective = objective;
  doc.assumption = assumption;
  doc.init = lg.init;
  doc.alphabet = lg.alphabet;
  doc.edge_label.assign(lg.graph.num_edges(), std::nullopt);
  for (EdgeId e = 0; e < lg.graph.num_edges(); ++e) doc.edge_label[e] = lg.label[e];
  doc.vertex_priority.assign(lg.graph.num_vertices(), std::nullopt);
  if (objective && objective->kind == Objective::Kind::Parity)
    for (Vertex v = 0; v < lg.graph.num_vertices(); ++v)
      doc.vertex_priority[v] = objective->priority[v];
  return doc;
}

std::string serialize_game(const GameDoc& doc) {
  const GameGraph& g = doc.graph;
  std::ostringstream out;
  out << "game " << doc.name << "\n";
  if (g.allow_dead_ends()) out << "deadends\n";
  if (doc.init) out << "init " << g.name(*doc.init) << "\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "vertex " << g.name(v) << " owner=" << g.owner(v);
    if (v < static_cast<int>(doc.vertex_priority.size()) && doc.vertex_priority[v])
      out << " priority=" << *doc.vertex_priority[v];
    out << "\n";
  }
  for (const auto& [u, v] : g.edges()) out << "edge " << g.name(u) << " " << g.name(v) << "\n";

  if (doc.objective) {
    const Objective& o = *doc.objective;
    switch (o.kind) {
      case Objective::Kind::Reach:
        out << "objective reach";
        for (Vertex v : o.target) out << " " << g.name(v);
        out << "\n";
        break;
      case Objective::Kind::Parity:
        out << "objective parity\n";
        break;
      case Objective::Kind::Rabin: {
        out << "objective rabin\n";
        auto names = [&](const std::vector<Vertex>& vs) {
          std::string s = "{";
          for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.name(vs[i]);
          return s + "}";
        };
        for (const auto& pair : o.pairs)
          out << "pair F=" << names(pair.fin) << " R=" << names(pair.avoid) << "\n";
        break;
      }
    }
  }

  const Assumption& a = doc.assumption;
  auto edge_str = [&](EdgeId e) {
    return "(" + g.name(g.edge(e).first) + "," + g.name(g.edge(e).second) + ")";
  };
  switch (a.kind) {
    case Assumption::Kind::None:
      break;
    case Assumption::Kind::LiveEdges:
      for (EdgeId e : a.edges) out << "assume live " << edge_str(e) << "\n";
      break;
    case Assumption::Kind::CoLiveEdges:
      for (EdgeId e : a.edges) out << "assume colive " << edge_str(e) << "\n";
      break;
    case Assumption::Kind::LiveGroups:
      for (size_t i = 0; i < a.groups.size(); ++i) {
        out << "assume group G" << (i + 1);
        for (EdgeId e : a.groups[i]) out << " " << edge_str(e);
        out << "\n";
      }
      break;
    case Assumption::Kind::PersistentLiveGroups:
      for (size_t i = 0; i < a.persistent.size(); ++i) {
        const auto& p = a.persistent[i];
        out << "assume pers G" << (i + 1) << " S={";
        for (size_t j = 0; j < p.region.size(); ++j)
          out << (j ? "," : "") << g.name(p.region[j]);
        out << "} C={";
        for (size_t j = 0; j < p.committed.size(); ++j)
          out << (j ? "," : "") << edge_str(p.committed[j]);
        out << "} T={";
        for (size_t j = 0; j < p.target.size(); ++j)
          out << (j ? "," : "") << g.name(p.target[j]);
        out << "}\n";
      }
      break;
    case Assumption::Kind::LiveCnfGroups:
      for (const auto& vc : a.cnf) {
        out << "assume cnf " << g.name(vc.vertex) << " ";
        for (size_t i = 0; i < vc.clauses.size(); ++i) {
          if (i) out << "&";
          out << "(";
          for (size_t j = 0; j < vc.clauses[i].size(); ++j) {
            if (j) out << "|";
            out << edge_str(vc.clauses[i][j]);
          }
          out << ")";
        }
        out << "\n";
      }
      break;
  }

  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (e < static_cast<int>(doc.edge_label.size()) && doc.edge_label[e])
      out << "label " << edge_str(e) << " " << doc.alphabet[*doc.edge_label[e]] << "\n";
  return out.str();
}

std::string serialize_result(const GameGraph& g, const SolveResult& result) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    out << "winner " << g.name(v) << " " << result.winner[v] << "\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (v < static_cast<int>(result.strategy.size()) && result.strategy[v] >= 0)
      out << "strategy " << g.name(v) << " -> " << g.name(result.strategy[v]) << "\n";
  for (const auto& [v, lasso] : result.witness) {
    out << "witness " << g.name(v) << " stem";
    for (Vertex s : lasso.stem) out << " " << g.name(s);
    out << " cycle";
    for (Vertex s : lasso.cycle) out << " " << g.name(s);
    out << "\n";
  }
  return out.str();
}

std::map<Vertex, Vertex> parse_strategy(const GameGraph& g, const std::string& text) {
  std::map<Vertex, Vertex> strat;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head != "strategy") continue;
    std::string u, arrow, v;
    if (!(ls >> u >> arrow >> v) || arrow != "->")
      throw parse_error("line " + std::to_string(no) + ": expected 'strategy U -> V'");
    if (!g.find_vertex(u) || !g.find_vertex(v))
      throw semantic_error("line " + std::to_string(no) + ": unknown vertex in strategy");
    strat[g.vertex(u)] = g.vertex(v);
  }
  return strat;
}

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula f;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  int expected_clauses = 0;
  std::vector<int> current;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      if (!(ls >> p >> cnf >> f.vars >> expected_clauses) || cnf != "cnf")
        throw parse_error("line " + std::to_string(no) + ": bad DIMACS header");
      header = true;
      continue;
    }
    if (!header) throw parse_error("line " + std::to_string(no) + ": clause before header");
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > f.vars)
          throw parse_error("line " + std::to_string(no) + ": literal out of range");
        current.push_back(lit);
      }
    }
  }
  if (!header) throw parse_error("missing DIMACS header");
  if (!current.empty()) f.clauses.push_back(current);
  if (expected_clauses && static_cast<int>(f.clauses.size()) != expected_clauses)
    throw parse_error("clause count does not match header");
  return f;
}

}  // namespace aug
