#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace aug {

// All operations report failures through Error; `kind` maps onto CLI exit
// codes and C API status values.
struct Error : std::runtime_error {
  enum class Kind { Parse, Semantic, Usage, Bound, Internal };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error parse_error(const std::string& m) { return Error(Error::Kind::Parse, m); }
inline Error semantic_error(const std::string& m) { return Error(Error::Kind::Semantic, m); }
inline Error usage_error(const std::string& m) { return Error(Error::Kind::Usage, m); }
inline Error bound_error(const std::string& m) { return Error(Error::Kind::Bound, m); }
inline Error internal_error(const std::string& m) { return Error(Error::Kind::Internal, m); }

using Vertex = int;
using EdgeId = int;

// Finite two-player game graph. Vertices and edges keep declaration order;
// every deterministic iteration in the library follows that order.
class GameGraph {
 public:
  int add_vertex(const std::string& name, int owner);
  EdgeId add_edge(Vertex u, Vertex v);
  EdgeId add_edge(const std::string& u, const std::string& v);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::string& name(Vertex v) const { return names_[v]; }
  int owner(Vertex v) const { return owner_[v]; }
  Vertex vertex(const std::string& name) const;
  std::optional<Vertex> find_vertex(const std::string& name) const;
  const std::pair<Vertex, Vertex>& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  const std::vector<EdgeId>& out(Vertex v) const { return out_[v]; }
  const std::vector<EdgeId>& in(Vertex v) const { return in_[v]; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  bool allow_dead_ends() const { return allow_dead_ends_; }
  void set_allow_dead_ends(bool b) { allow_dead_ends_ = b; }

  // Throws unless every vertex has an outgoing edge (or dead-ends are allowed).
  void check_total() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> owner_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::map<std::pair<Vertex, Vertex>, EdgeId> edge_index_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  bool allow_dead_ends_ = false;
};

struct RabinPair {
  std::vector<Vertex> fin;    // visited infinitely often
  std::vector<Vertex> avoid;  // visited only finitely often
};

struct Objective {
  enum class Kind { Reach, Parity, Rabin };
  Kind kind = Kind::Reach;
  std::vector<Vertex> target;     // Reach
  std::vector<int> priority;      // Parity, one entry per vertex
  std::vector<RabinPair> pairs;   // Rabin

  static Objective reach(std::vector<Vertex> t);
  static Objective parity(std::vector<int> prio);
  static Objective rabin(std::vector<RabinPair> pairs);
};

// Persistent live group (S, C, T): if a play suffix stays in `region` while
// always taking `committed` edges where one is available, it must eventually
// reach `target`.
struct PersistentLiveGroup {
  std::vector<Vertex> region;     // S
  std::vector<EdgeId> committed;  // C, subset of E0
  std::vector<Vertex> target;    // T, subset of S
};

// One clause of a live CNF group: a disjunction of outgoing edges. A clause
// with no literals is the constant false (arises from target pruning).
using CnfClause = std::vector<EdgeId>;

struct VertexCnf {
  Vertex vertex;
  std::vector<CnfClause> clauses;
};

struct Assumption {
  enum class Kind { None, LiveEdges, CoLiveEdges, LiveGroups, PersistentLiveGroups, LiveCnfGroups };
  Kind kind = Kind::None;
  std::vector<EdgeId> edges;                    // LiveEdges / CoLiveEdges
  std::vector<std::vector<EdgeId>> groups;      // LiveGroups
  std::vector<PersistentLiveGroup> persistent;  // PersistentLiveGroups
  std::vector<VertexCnf> cnf;                   // LiveCnfGroups

  static Assumption none();
  static Assumption live_edges(std::vector<EdgeId> e);
  static Assumption colive_edges(std::vector<EdgeId> e);
  static Assumption live_groups(std::vector<std::vector<EdgeId>> g);
  static Assumption persistent_groups(std::vector<PersistentLiveGroup> g);
  static Assumption cnf_groups(std::vector<VertexCnf> f);
};

const char* assumption_kind_name(Assumption::Kind k);

struct AugmentedGame {
  GameGraph graph;
  Objective objective;
  Assumption assumption;
  std::optional<Vertex> init;
  std::string name = "game";
};

struct LabeledGameGraph {
  GameGraph graph;
  std::vector<std::string> alphabet;  // declaration order of first use
  std::vector<int> label;             // per edge, index into alphabet
  Vertex init = 0;

  int symbol(const std::string& s) const;
  bool is_alternating() const;
};

struct ValidateOptions {
  bool allow_p0_assumption_edges = false;
};

// Enforces the structural invariants of an augmented game: edge endpoints
// declared, totality unless flagged, assumption sets over declared elements,
// live/co-live/group edges in E1 (unless the option lifts that), CNF literals
// outgoing from their vertex, T <= S <= V and C <= E0 for persistent groups,
// and a priority for every vertex under a parity objective.
void validate_game(const AugmentedGame& game, const ValidateOptions& opts = {});

// Per-vertex winner partition plus a memoryless Player-0 strategy on W0.
struct LassoWitness {
  std::vector<Vertex> stem;   // may be empty
  std::vector<Vertex> cycle;  // nonempty; cycle.back() has an edge to cycle.front()
};

struct SolveResult {
  std::vector<int> winner;    // per vertex, 0 or 1
  std::vector<Vertex> strategy;  // per vertex, successor or -1
  std::map<Vertex, LassoWitness> witness;

  std::vector<Vertex> region(int player) const;
};

// Tail signature of a play: vertices and edges seen infinitely often.
struct InfSetProfile {
  std::vector<Vertex> vertices;  // sorted
  std::vector<EdgeId> edges;     // sorted
};

std::vector<Vertex> sorted_unique(std::vector<Vertex> xs);
bool contains(const std::vector<int>& sorted_xs, int x);

}  // namespace aug
