#include "augsolve.h"

#include <cstring>
#include <string>

#include "core/augmented.hpp"
#include "core/io.hpp"
#include "core/random_games.hpp"
#include "core/reductions.hpp"
#include "core/transform.hpp"

using namespace aug;

struct aug_game {
  GameDoc doc;
};

struct aug_result {
  GameGraph graph;  // vertex names for queries/serialization
  SolveResult result;
  std::string pipeline;
  long long qsolve_calls = -1;
  int qsolve_n = 0, qsolve_h = 0, qsolve_l = 0;
};

namespace {

thread_local std::string g_last_error;

aug_status status_of(const Error& e) {
  g_last_error = e.what();
  switch (e.kind) {
    case Error::Kind::Parse: return AUG_ERR_PARSE;
    case Error::Kind::Semantic: return AUG_ERR_SEMANTIC;
    case Error::Kind::Usage: return AUG_ERR_USAGE;
    case Error::Kind::Bound: return AUG_ERR_BOUND;
    case Error::Kind::Internal: return AUG_ERR_INTERNAL;
  }
  return AUG_ERR_INTERNAL;
}

template <typename F>
aug_status guard(F&& f) {
  try {
    f();
    return AUG_OK;
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AUG_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Assumption::Kind assumption_kind_of(const std::string& name) {
  if (name == "none") return Assumption::Kind::None;
  if (name == "live") return Assumption::Kind::LiveEdges;
  if (name == "colive") return Assumption::Kind::CoLiveEdges;
  if (name == "group") return Assumption::Kind::LiveGroups;
  if (name == "pers") return Assumption::Kind::PersistentLiveGroups;
  if (name == "cnf") return Assumption::Kind::LiveCnfGroups;
  throw usage_error("unknown assumption class '" + name + "'");
}

}  // namespace

extern "C" {

const char* aug_last_error(void) { return g_last_error.c_str(); }

void aug_string_free(char* s) { ::free(s); }

aug_status aug_game_parse(const char* text, const aug_parse_options* opts, aug_game** out) {
  return guard([&] {
    if (!text || !out) throw usage_error("null argument");
    ParseOptions po;
    if (opts) po.allow_p0_assumption_edges = opts->allow_p0_assumption_edges != 0;
    *out = new aug_game{parse_game(text, po)};
  });
}

void aug_game_free(aug_game* game) { delete game; }

aug_status aug_game_serialize(const aug_game* game, char** out) {
  return guard([&] {
    if (!game || !out) throw usage_error("null argument");
    *out = dup_string(serialize_game(game->doc));
  });
}

aug_status aug_game_from_dimacs(const char* text, aug_game** out) {
  return guard([&] {
    if (!text || !out) throw usage_error("null argument");
    AugmentedGame game = sat_to_game(parse_dimacs(text));
    *out = new aug_game{doc_of_augmented(game)};
  });
}

aug_status aug_game_random(int vertices, int edges, const char* assumption,
                           unsigned long long seed, aug_game** out) {
  return guard([&] {
    if (!out) throw usage_error("null argument");
    RandomGameSpec spec;
    spec.vertices = vertices;
    spec.edges = edges;
    spec.assumption = assumption_kind_of(assumption ? assumption : "none");
    spec.seed = seed;
    *out = new aug_game{doc_of_augmented(random_game(spec))};
  });
}

aug_status aug_game_reduce(const aug_game* game, const char* target, aug_game** out) {
  return guard([&] {
    if (!game || !target || !out) throw usage_error("null argument");
    AugmentedGame in = to_augmented(game->doc);
    std::string t = target;
    if (t == "parity") {
      *out = new aug_game{doc_of_augmented(reach_to_parity(in))};
    } else if (t == "rabin") {
      AugmentedGame tail = to_tail_objective(in);
      if (tail.assumption.kind == Assumption::Kind::LiveCnfGroups)
        tail = cnf_to_live_edges(tail).game;
      *out = new aug_game{doc_of_augmented(to_rabin(tail).game)};
    } else if (t == "live-edges") {
      AugmentedGame reduced;
      if (in.assumption.kind == Assumption::Kind::LiveCnfGroups)
        reduced = cnf_to_live_edges(in).game;
      else if (in.assumption.kind == Assumption::Kind::LiveGroups)
        reduced = singleton_groups_to_live_edges(in).game;
      else
        throw usage_error("reduce to live-edges: live groups or CNF groups required");
      *out = new aug_game{doc_of_augmented(reduced)};
    } else if (t == "live-groups") {
      AugmentedGame reduced = in;
      if (in.assumption.kind == Assumption::Kind::LiveEdges) {
        std::vector<std::vector<EdgeId>> groups;
        for (EdgeId e : in.assumption.edges) groups.push_back({e});
        reduced.assumption = Assumption::live_groups(std::move(groups));
      } else if (in.assumption.kind == Assumption::Kind::LiveCnfGroups) {
        std::vector<std::vector<EdgeId>> groups;
        for (const auto& vc : in.assumption.cnf)
          for (const auto& clause : vc.clauses) groups.push_back(clause);
        reduced.assumption = Assumption::live_groups(std::move(groups));
      } else {
        throw usage_error("reduce to live-groups: live edges or CNF groups required");
      }
      *out = new aug_game{doc_of_augmented(reduced)};
    } else {
      throw usage_error("reduce: unknown target '" + t + "'");
    }
  });
}

aug_status aug_game_product(const aug_game* spec, const aug_game* plant, aug_game** out) {
  return guard([&] {
    if (!spec || !plant || !out) throw usage_error("null argument");
    ProductInput s;
    s.graph = to_labeled(spec->doc);
    if (spec->doc.objective) s.objective = *spec->doc.objective;
    ProductInput p;
    p.graph = to_labeled(plant->doc);
    if (plant->doc.assumption.kind == Assumption::Kind::LiveEdges)
      p.live_edges = plant->doc.assumption.edges;
    else if (plant->doc.assumption.kind != Assumption::Kind::None)
      throw usage_error("product: the plant side carries live edges only");
    ProductResult r = product(s, p);
    *out = new aug_game{doc_of_augmented(r.game)};
  });
}

aug_status aug_game_decompose(const aug_game* game, aug_game** spec_out, aug_game** plant_out) {
  return guard([&] {
    if (!game || !spec_out || !plant_out) throw usage_error("null argument");
    DecomposeResult r = decompose(to_augmented(game->doc));
    *spec_out = new aug_game{
        doc_of_labeled(r.spec_graph, r.spec_objective, Assumption::none(), "spec")};
    Assumption live = Assumption::live_edges(r.plant_live_edges);
    *plant_out = new aug_game{doc_of_labeled(r.plant_graph, std::nullopt, live, "plant")};
  });
}

aug_status aug_solve(const aug_game* game, const aug_solve_options* opts, aug_result** out) {
  return guard([&] {
    if (!game || !out) throw usage_error("null argument");
    SolveOptions so;
    if (opts) {
      if (opts->algo && *opts->algo) {
        auto a = algo_from_name(opts->algo);
        if (!a) throw usage_error(std::string("unknown algorithm '") + opts->algo + "'");
        so.algo = *a;
      }
      so.want_witness = opts->want_witness != 0;
      if (opts->oracle_max_edges > 0) so.limits.max_edges = opts->oracle_max_edges;
      if (opts->oracle_max_strategies > 0)
        so.limits.max_strategies = opts->oracle_max_strategies;
      if (opts->jobs > 0) so.jobs = opts->jobs;
    }
    AugmentedGame in = to_augmented(game->doc);
    DispatchResult d = solve_augmented(in, so);
    auto* res = new aug_result;
    res->graph = in.graph;
    res->result = std::move(d.result);
    res->pipeline = d.pipeline;
    res->qsolve_calls = d.qsolve_calls;
    res->qsolve_n = d.qsolve_n;
    res->qsolve_h = d.qsolve_h;
    res->qsolve_l = d.qsolve_l;
    *out = res;
  });
}

void aug_result_free(aug_result* result) { delete result; }

aug_status aug_result_winner(const aug_result* result, const char* vertex, int* winner) {
  return guard([&] {
    if (!result || !vertex || !winner) throw usage_error("null argument");
    *winner = result->result.winner[result->graph.vertex(vertex)];
  });
}

aug_status aug_result_serialize(const aug_result* result, char** out) {
  return guard([&] {
    if (!result || !out) throw usage_error("null argument");
    *out = dup_string(serialize_result(result->graph, result->result));
  });
}

aug_status aug_result_stats(const aug_result* result, char** out) {
  return guard([&] {
    if (!result || !out) throw usage_error("null argument");
    std::string s;
    s += "pipeline " + result->pipeline + "\n";
    s += "vertices " + std::to_string(result->graph.num_vertices()) + "\n";
    s += "edges " + std::to_string(result->graph.num_edges()) + "\n";
    if (result->qsolve_calls >= 0) {
      s += "qsolve-calls " + std::to_string(result->qsolve_calls) + "\n";
      s += "qsolve-n " + std::to_string(result->qsolve_n) + "\n";
      s += "qsolve-h " + std::to_string(result->qsolve_h) + "\n";
      s += "qsolve-l " + std::to_string(result->qsolve_l) + "\n";
    }
    *out = dup_string(s);
  });
}

aug_status aug_verify(const aug_game* game, const char* strategy_text, const char* const* claim,
                      size_t claim_count, int* verdict, char** counterexample_out) {
  return guard([&] {
    if (!game || !strategy_text || !verdict) throw usage_error("null argument");
    AugmentedGame in = to_augmented(game->doc);
    AugmentedGame tail = to_tail_objective(in);
    std::map<Vertex, Vertex> strat = parse_strategy(in.graph, strategy_text);
    if (in.objective.kind == Objective::Kind::Reach) {
      // In the converted game targets are sinks; their only move is the loop.
      for (Vertex t : in.objective.target)
        if (strat.count(t) || in.graph.owner(t) == 0) strat[t] = t;
    }
    std::vector<Vertex> claims;
    for (size_t i = 0; i < claim_count; ++i) {
      if (!claim[i]) throw usage_error("null claim vertex");
      claims.push_back(in.graph.vertex(claim[i]));
    }
    VerifyOutcome v = verify_strategy(tail, strat, claims);
    *verdict = v.ok ? 1 : 0;
    if (counterexample_out) {
      *counterexample_out = nullptr;
      if (!v.ok && v.counterexample) {
        SolveResult r;
        r.winner.assign(tail.graph.num_vertices(), 0);
        r.witness[*v.failed_vertex] = *v.counterexample;
        std::string text = serialize_result(tail.graph, r);
        // Keep only the witness line.
        auto pos = text.find("witness");
        *counterexample_out = dup_string(pos == std::string::npos ? text : text.substr(pos));
      }
    }
  });
}

}  // extern "C"
