/* C interface to the augmented game solver. All structured data crosses the
 * boundary as the library's text formats; handles are opaque. Every function
 * returns AUG_OK or an error status; aug_last_error() describes the most
 * recent failure on the calling thread. */

#ifndef AUGSOLVE_H
#define AUGSOLVE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct aug_game aug_game;
typedef struct aug_result aug_result;

typedef enum aug_status {
  AUG_OK = 0,
  AUG_ERR_PARSE = 1,
  AUG_ERR_SEMANTIC = 2,
  AUG_ERR_USAGE = 3,
  AUG_ERR_BOUND = 4,
  AUG_ERR_INTERNAL = 5
} aug_status;

const char* aug_last_error(void);

/* Strings returned through char** outputs are heap-allocated; release them
 * with aug_string_free. */
void aug_string_free(char* s);

/* ---- games ---------------------------------------------------------- */

typedef struct aug_parse_options {
  int allow_p0_assumption_edges;
} aug_parse_options;

aug_status aug_game_parse(const char* text, const aug_parse_options* opts, aug_game** out);
void aug_game_free(aug_game* game);
aug_status aug_game_serialize(const aug_game* game, char** out);

/* Instance generators. `assumption` is one of: none, live, colive, group,
 * pers, cnf. */
aug_status aug_game_from_dimacs(const char* text, aug_game** out);
aug_status aug_game_random(int vertices, int edges, const char* assumption,
                           unsigned long long seed, aug_game** out);

/* Reductions; `target` is one of: rabin, parity, live-edges, live-groups. */
aug_status aug_game_reduce(const aug_game* game, const char* target, aug_game** out);
aug_status aug_game_product(const aug_game* spec, const aug_game* plant, aug_game** out);
aug_status aug_game_decompose(const aug_game* game, aug_game** spec_out, aug_game** plant_out);

/* ---- solving -------------------------------------------------------- */

typedef struct aug_solve_options {
  const char* algo;           /* NULL or "auto", "zielonka", "parys", "colive",
                                 "attr-pers", "zielonka-pers", "qsolve-pers",
                                 "oracle", "rabin-oracle" */
  int want_witness;
  int oracle_max_edges;       /* <= 0: default (18) */
  long long oracle_max_strategies; /* <= 0: default (1e6) */
  int jobs;                   /* <= 0: 1 */
} aug_solve_options;

aug_status aug_solve(const aug_game* game, const aug_solve_options* opts, aug_result** out);
void aug_result_free(aug_result* result);

/* Winner of a vertex: 0 or 1. */
aug_status aug_result_winner(const aug_result* result, const char* vertex, int* winner);
/* The documented result text: winner/strategy/witness lines. */
aug_status aug_result_serialize(const aug_result* result, char** out);
/* Pipeline and recursion-counter report. */
aug_status aug_result_stats(const aug_result* result, char** out);

/* Verifies a strategy (text of `strategy U -> V` lines) from the claimed
 * vertices. *verdict becomes 1 on success, 0 with a counterexample written to
 * *counterexample_out (a `witness ...` line) on failure. */
aug_status aug_verify(const aug_game* game, const char* strategy_text,
                      const char* const* claim, size_t claim_count, int* verdict,
                      char** counterexample_out);

#ifdef __cplusplus
}
#endif

#endif /* AUGSOLVE_H */
