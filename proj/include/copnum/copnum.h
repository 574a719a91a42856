/*
 * copnum C API: exact cop numbers, small-graph census and constructions.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a copnum_status; on failure a thread-local
 * message is available from copnum_last_error(). Strings returned through
 * `char**` out-parameters are heap allocated and released with
 * copnum_string_free().
 */
#ifndef COPNUM_COPNUM_H
#define COPNUM_COPNUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COPNUM_API __declspec(dllexport)
#else
#define COPNUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum copnum_status {
  COPNUM_OK = 0,
  COPNUM_E_PARSE = 3,        /* malformed graph6, JSON or corpus record */
  COPNUM_E_DISCONNECTED = 4, /* the game needs a connected graph */
  COPNUM_E_SOLVER_CAP = 5,   /* more than 4 cops or 30 vertices */
  COPNUM_E_CONTRACT = 6,     /* invalid argument */
  COPNUM_E_REFUSED = 7,      /* k cops lose: no winning move or transcript */
  COPNUM_E_INTEGRITY = 8,    /* duplicate or mixed-order corpus, gaps */
  COPNUM_E_CHECKPOINT = 9,   /* checkpoint does not match the request */
  COPNUM_E_IO = 10,
  COPNUM_E_INTERRUPTED = 11, /* run stopped; resume from the checkpoint */
  COPNUM_E_INTERNAL = 12
} copnum_status;

typedef enum copnum_format {
  COPNUM_FORMAT_CSV = 0,
  COPNUM_FORMAT_JSON = 1,
  COPNUM_FORMAT_TEXT = 2
} copnum_format;

typedef enum copnum_claim {
  COPNUM_CLAIM_NINE_VERTEX = 0,
  COPNUM_CLAIM_PETERSEN_UNIQUE = 1
} copnum_claim;

typedef struct copnum_graph copnum_graph;
typedef struct copnum_solution copnum_solution;
typedef struct copnum_census copnum_census;

/* Receives progress lines from long runs. */
typedef void (*copnum_progress_fn)(void* user, const char* message);
/* Receives one graph6 record (no newline); return nonzero to stop. */
typedef int (*copnum_graph6_sink)(void* user, const char* graph6);

COPNUM_API const char* copnum_version(void);
COPNUM_API const char* copnum_last_error(void);
COPNUM_API void copnum_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

COPNUM_API copnum_status copnum_graph_from_graph6(const char* text, size_t len,
                                                  copnum_graph** out);
COPNUM_API copnum_status copnum_graph_to_graph6(const copnum_graph* g,
                                                char** out);
COPNUM_API void copnum_graph_free(copnum_graph* g);
COPNUM_API int copnum_graph_order(const copnum_graph* g);
COPNUM_API int copnum_graph_edge_count(const copnum_graph* g);
COPNUM_API int copnum_graph_is_connected(const copnum_graph* g);
/* Writes the girth, or -1 for a forest. */
COPNUM_API copnum_status copnum_graph_girth(const copnum_graph* g, int* out);

/* petersen | cycle:N | path:N | complete:N | star:N | pg:Q |
   universal:<g6> | plus-k:<g6 G>:<g6 H>:<anchor>:<k> */
COPNUM_API copnum_status copnum_construct(const char* spec, copnum_graph** out);

COPNUM_API copnum_status copnum_is_isomorphic(const copnum_graph* a,
                                              const copnum_graph* b, int* out);
/* graph6 of the canonical representative. */
COPNUM_API copnum_status copnum_canonical_graph6(const copnum_graph* g,
                                                 char** out);

/* ---- game solving ------------------------------------------------------ */

COPNUM_API copnum_status copnum_cop_number(const copnum_graph* g, int* out);
/* Cop-win ordering into `order` (capacity n); *exists = 0 when none. */
COPNUM_API copnum_status copnum_dismantling_order(const copnum_graph* g,
                                                  int* order, size_t capacity,
                                                  int* exists);
COPNUM_API copnum_status copnum_solve(const copnum_graph* g, int k,
                                      copnum_solution** out);
COPNUM_API void copnum_solution_free(copnum_solution* s);
COPNUM_API int copnum_solution_cops_win(const copnum_solution* s);
/* Worst-case capture time from the optimal opening; refused when k loses. */
COPNUM_API copnum_status copnum_solution_capture_time(const copnum_solution* s,
                                                      int* out);
/* Capture time of one state (turn: 0 cops, 1 robber); -1 if the robber wins. */
COPNUM_API copnum_status copnum_solution_state_time(const copnum_solution* s,
                                                    const int* cops, int k,
                                                    int robber, int turn,
                                                    int* out);
/* Optimal-play transcript; COPNUM_E_REFUSED when k cops lose. */
COPNUM_API copnum_status copnum_play_transcript(const copnum_graph* g, int k,
                                                char** out);

/* ---- enumeration and census ------------------------------------------- */

/* Streams every graph of order n (sorted by canonical form). */
COPNUM_API copnum_status copnum_enumerate(int n, int connected_only, int jobs,
                                          copnum_graph6_sink sink, void* user);
/* Reads a graph6 corpus (integrity checked) and streams its records. */
COPNUM_API copnum_status copnum_ingest_corpus(const char* path,
                                              int connected_only,
                                              copnum_graph6_sink sink,
                                              void* user);

typedef struct copnum_census_options {
  int n_max;
  int k_max;
  int jobs;
  const char* corpus_path;    /* NULL: generated orders 1..n_max */
  const char* checkpoint_dir; /* NULL: no checkpointing */
  uint64_t checkpoint_interval; /* 0: default of 100000 graphs */
  uint64_t stop_after;          /* 0: no limit */
  copnum_progress_fn progress;
  void* progress_user;
} copnum_census_options;

COPNUM_API void copnum_census_options_init(copnum_census_options* o);
/* On COPNUM_E_INTERRUPTED, *out still receives the partial table. */
COPNUM_API copnum_status copnum_census_run(const copnum_census_options* o,
                                           copnum_census** out);
COPNUM_API copnum_status copnum_census_from_json(const char* json,
                                                 copnum_census** out);
COPNUM_API void copnum_census_free(copnum_census* t);
COPNUM_API copnum_status copnum_census_render(const copnum_census* t,
                                              copnum_format format,
                                              int include_timing, char** out);
/* Text report of m_k / M_k; COPNUM_E_INTEGRITY on incomplete tables. */
COPNUM_API copnum_status copnum_census_min_orders(const copnum_census* t,
                                                  char** out);
COPNUM_API int copnum_census_row_count(const copnum_census* t);
/* Class 1..k_max, or k_max + 1 for the overflow bucket. */
COPNUM_API copnum_status copnum_census_count(const copnum_census* t, int n,
                                             int cls, uint64_t* out);
COPNUM_API copnum_status copnum_census_witness(const copnum_census* t, int n,
                                               int cls, char** out);

/* ---- claims ------------------------------------------------------------ */

typedef struct copnum_verify_options {
  copnum_claim claim;
  int horizon; /* 0: 9 for nine-vertex, 10 for petersen-unique */
  int jobs;
  const char* corpus_path;
  const char* checkpoint_dir;
  uint64_t stop_after;
  copnum_progress_fn progress;
  void* progress_user;
} copnum_verify_options;

COPNUM_API void copnum_verify_options_init(copnum_verify_options* o);
COPNUM_API copnum_status copnum_verify_estimate(const copnum_verify_options* o,
                                                char** out);
/* *passed is set and *certificate receives JSON only on COPNUM_OK. */
COPNUM_API copnum_status copnum_verify(const copnum_verify_options* o,
                                       int* passed, char** certificate);

/* Asks running censuses to checkpoint and stop (async-signal-safe). */
COPNUM_API void copnum_request_cancel(void);
COPNUM_API void copnum_reset_cancel(void);

#ifdef __cplusplus
}
#endif

#endif /* COPNUM_COPNUM_H */
