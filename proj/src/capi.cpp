#include "copnum/copnum.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "copnum/canonical.hpp"
#include "copnum/census.hpp"
#include "copnum/constructions.hpp"
#include "copnum/solver.hpp"
#include "copnum/verify.hpp"

struct copnum_graph {
  copnum::Graph graph;
};

struct copnum_solution {
  copnum::SolveResult result;
};

struct copnum_census {
  copnum::CensusTable table;
};

namespace {

thread_local std::string g_last_error;

copnum_status status_of(copnum::ErrorCode code) {
  using copnum::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return COPNUM_E_PARSE;
    case ErrorCode::Contract: return COPNUM_E_CONTRACT;
    case ErrorCode::Disconnected: return COPNUM_E_DISCONNECTED;
    case ErrorCode::SolverCap: return COPNUM_E_SOLVER_CAP;
    case ErrorCode::NoWinningMove: return COPNUM_E_REFUSED;
    case ErrorCode::Integrity: return COPNUM_E_INTEGRITY;
    case ErrorCode::CheckpointMismatch: return COPNUM_E_CHECKPOINT;
    case ErrorCode::Io: return COPNUM_E_IO;
    case ErrorCode::Interrupted: return COPNUM_E_INTERRUPTED;
  }
  return COPNUM_E_INTERNAL;
}

copnum_status fail(copnum_status s, std::string message) {
  g_last_error = std::move(message);
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
copnum_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return COPNUM_OK;
  } catch (const copnum::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(COPNUM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COPNUM_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

#define COPNUM_REQUIRE(cond)                                          \
  do {                                                                \
    if (!(cond)) return fail(COPNUM_E_CONTRACT, "null argument: " #cond); \
  } while (0)

copnum::ProgressFn progress_of(copnum_progress_fn fn, void* user) {
  if (!fn) return {};
  return [fn, user](const std::string& m) { fn(user, m.c_str()); };
}

copnum_status stream_out(copnum::GraphStream stream, copnum_graph6_sink sink,
                         void* user) {
  while (auto g = stream.next()) {
    if (sink(user, copnum::emit_graph6(*g).c_str()) != 0) break;
  }
  return COPNUM_OK;
}

copnum::VerifyOptions verify_options(const copnum_verify_options* o) {
  copnum::VerifyOptions v;
  switch (o->claim) {
    case COPNUM_CLAIM_NINE_VERTEX: v.claim = copnum::Claim::NineVertex; break;
    case COPNUM_CLAIM_PETERSEN_UNIQUE: v.claim = copnum::Claim::PetersenUnique; break;
    default: copnum::contract_violation("unknown claim");
  }
  v.horizon = o->horizon;
  v.jobs = o->jobs;
  if (o->corpus_path) v.corpus = o->corpus_path;
  if (o->checkpoint_dir) v.checkpoint_dir = o->checkpoint_dir;
  if (o->stop_after) v.stop_after = o->stop_after;
  v.progress = progress_of(o->progress, o->progress_user);
  return v;
}

const copnum::CensusRow& census_row(const copnum_census* t, int n) {
  const copnum::CensusRow* r = t->table.row(n);
  if (!r) copnum::contract_violation("no row for order " + std::to_string(n));
  return *r;
}

}  // namespace

extern "C" {

const char* copnum_version(void) { return "1.0.0"; }

const char* copnum_last_error(void) { return g_last_error.c_str(); }

void copnum_string_free(char* s) { std::free(s); }

copnum_status copnum_graph_from_graph6(const char* text, size_t len,
                                       copnum_graph** out) {
  COPNUM_REQUIRE(text && out);
  return guarded([&] {
    *out = new copnum_graph{copnum::parse_graph6(std::string_view(text, len))};
  });
}

copnum_status copnum_graph_to_graph6(const copnum_graph* g, char** out) {
  COPNUM_REQUIRE(g && out);
  return guarded([&] { *out = dup_string(copnum::emit_graph6(g->graph)); });
}

void copnum_graph_free(copnum_graph* g) { delete g; }

int copnum_graph_order(const copnum_graph* g) { return g ? g->graph.order() : 0; }

int copnum_graph_edge_count(const copnum_graph* g) {
  return g ? g->graph.edge_count() : 0;
}

int copnum_graph_is_connected(const copnum_graph* g) {
  return g && g->graph.is_connected() ? 1 : 0;
}

copnum_status copnum_graph_girth(const copnum_graph* g, int* out) {
  COPNUM_REQUIRE(g && out);
  return guarded([&] { *out = g->graph.girth().value_or(-1); });
}

copnum_status copnum_construct(const char* spec, copnum_graph** out) {
  COPNUM_REQUIRE(spec && out);
  return guarded([&] { *out = new copnum_graph{copnum::construct(spec)}; });
}

copnum_status copnum_is_isomorphic(const copnum_graph* a, const copnum_graph* b,
                                   int* out) {
  COPNUM_REQUIRE(a && b && out);
  return guarded([&] { *out = copnum::is_isomorphic(a->graph, b->graph) ? 1 : 0; });
}

copnum_status copnum_canonical_graph6(const copnum_graph* g, char** out) {
  COPNUM_REQUIRE(g && out);
  return guarded([&] {
    *out = dup_string(copnum::emit_graph6(copnum::canonical_graph(g->graph)));
  });
}

copnum_status copnum_cop_number(const copnum_graph* g, int* out) {
  COPNUM_REQUIRE(g && out);
  return guarded([&] { *out = copnum::cop_number(g->graph); });
}

copnum_status copnum_dismantling_order(const copnum_graph* g, int* order,
                                       size_t capacity, int* exists) {
  COPNUM_REQUIRE(g && exists);
  return guarded([&] {
    const auto d = copnum::dismantling_order(g->graph);
    *exists = d ? 1 : 0;
    if (!d) return;
    if (!order || capacity < d->size()) {
      copnum::contract_violation("order buffer smaller than the graph");
    }
    for (std::size_t i = 0; i < d->size(); ++i) order[i] = (*d)[i];
  });
}

copnum_status copnum_solve(const copnum_graph* g, int k, copnum_solution** out) {
  COPNUM_REQUIRE(g && out);
  return guarded([&] { *out = new copnum_solution{copnum::cops_win(g->graph, k)}; });
}

void copnum_solution_free(copnum_solution* s) { delete s; }

int copnum_solution_cops_win(const copnum_solution* s) {
  return s && s->result.cops_win_overall() ? 1 : 0;
}

copnum_status copnum_solution_capture_time(const copnum_solution* s, int* out) {
  COPNUM_REQUIRE(s && out);
  const auto t = s->result.opening_capture_time();
  if (!t) {
    return fail(COPNUM_E_REFUSED, std::to_string(s->result.k()) +
                                      " cop(s) cannot force capture");
  }
  *out = *t;
  g_last_error.clear();
  return COPNUM_OK;
}

copnum_status copnum_solution_state_time(const copnum_solution* s, const int* cops,
                                         int k, int robber, int turn, int* out) {
  COPNUM_REQUIRE(s && cops && out);
  return guarded([&] {
    const int n = s->result.graph().order();
    if (k != s->result.k()) copnum::contract_violation("cop count differs from the solve");
    if (robber < 0 || robber >= n) copnum::contract_violation("robber vertex out of range");
    if (turn != 0 && turn != 1) copnum::contract_violation("turn must be 0 or 1");
    copnum::GameState st;
    st.cops.assign(cops, cops + k);
    for (int c : st.cops) {
      if (c < 0 || c >= n) copnum::contract_violation("cop vertex out of range");
    }
    std::sort(st.cops.begin(), st.cops.end());
    st.robber = robber;
    st.turn = turn == 0 ? copnum::Turn::Cops : copnum::Turn::Robber;
    *out = s->result.capture_time(st).value_or(-1);
  });
}

copnum_status copnum_play_transcript(const copnum_graph* g, int k, char** out) {
  COPNUM_REQUIRE(g && out);
  copnum_status s = guarded([&] { *out = dup_string(copnum::play_transcript(g->graph, k).text); });
  if (s != COPNUM_E_REFUSED) return s;
  try {
    const int c = copnum::cop_number(g->graph);
    return fail(s, std::to_string(k) + (k == 1 ? " cop" : " cops") +
                       " insufficient; c(G)=" + std::to_string(c));
  } catch (const std::exception&) {
    return s;
  }
}

copnum_status copnum_enumerate(int n, int connected_only, int jobs,
                               copnum_graph6_sink sink, void* user) {
  COPNUM_REQUIRE(sink);
  return guarded([&] {
    stream_out(copnum::generate_graphs(n,
                                       connected_only ? copnum::StreamFilter::Connected
                                                      : copnum::StreamFilter::All,
                                       jobs),
               sink, user);
  });
}

copnum_status copnum_ingest_corpus(const char* path, int connected_only,
                                   copnum_graph6_sink sink, void* user) {
  COPNUM_REQUIRE(path && sink);
  return guarded([&] {
    stream_out(copnum::ingest_corpus(path, connected_only
                                               ? copnum::StreamFilter::Connected
                                               : copnum::StreamFilter::All),
               sink, user);
  });
}

void copnum_census_options_init(copnum_census_options* o) {
  if (!o) return;
  *o = copnum_census_options{};
  o->n_max = 8;
  o->k_max = 3;
  o->jobs = 1;
}

copnum_status copnum_census_run(const copnum_census_options* o, copnum_census** out) {
  COPNUM_REQUIRE(o && out);
  *out = nullptr;
  copnum::CensusOptions co;
  co.n_max = o->n_max;
  co.k_max = o->k_max;
  co.jobs = o->jobs;
  if (o->corpus_path) co.corpus = o->corpus_path;
  if (o->checkpoint_dir) co.checkpoint_dir = o->checkpoint_dir;
  if (o->checkpoint_interval) co.checkpoint_interval = o->checkpoint_interval;
  if (o->stop_after) co.stop_after = o->stop_after;
  co.progress = progress_of(o->progress, o->progress_user);
  return guarded([&] {
    try {
      *out = new copnum_census{copnum::run_census(co)};
    } catch (const copnum::CensusInterrupted& e) {
      *out = new copnum_census{e.partial()};
      throw;
    }
  });
}

copnum_status copnum_census_from_json(const char* json, copnum_census** out) {
  COPNUM_REQUIRE(json && out);
  return guarded([&] { *out = new copnum_census{copnum::parse_census_json(json)}; });
}

void copnum_census_free(copnum_census* t) { delete t; }

copnum_status copnum_census_render(const copnum_census* t, copnum_format format,
                                   int include_timing, char** out) {
  COPNUM_REQUIRE(t && out);
  return guarded([&] {
    copnum::Format f;
    switch (format) {
      case COPNUM_FORMAT_CSV: f = copnum::Format::Csv; break;
      case COPNUM_FORMAT_JSON: f = copnum::Format::Json; break;
      case COPNUM_FORMAT_TEXT: f = copnum::Format::Text; break;
      default: copnum::contract_violation("unknown format");
    }
    *out = dup_string(copnum::render(t->table, f, include_timing != 0));
  });
}

copnum_status copnum_census_min_orders(const copnum_census* t, char** out) {
  COPNUM_REQUIRE(t && out);
  return guarded([&] {
    *out = dup_string(copnum::render_min_orders(copnum::derive_min_orders(t->table)));
  });
}

int copnum_census_row_count(const copnum_census* t) {
  return t ? static_cast<int>(t->table.rows.size()) : 0;
}

copnum_status copnum_census_count(const copnum_census* t, int n, int cls,
                                  uint64_t* out) {
  COPNUM_REQUIRE(t && out);
  return guarded([&] {
    const auto& r = census_row(t, n);
    if (cls < 1 || cls > t->table.k_max + 1) copnum::contract_violation("class out of range");
    *out = cls <= t->table.k_max ? r.f[cls - 1] : r.overflow;
  });
}

copnum_status copnum_census_witness(const copnum_census* t, int n, int cls,
                                    char** out) {
  COPNUM_REQUIRE(t && out);
  return guarded([&] {
    const auto& r = census_row(t, n);
    const auto it = r.witnesses.find(cls);
    if (it == r.witnesses.end()) {
      copnum::contract_violation("no graph of class " + std::to_string(cls) +
                                 " at order " + std::to_string(n));
    }
    *out = dup_string(it->second);
  });
}

void copnum_verify_options_init(copnum_verify_options* o) {
  if (!o) return;
  *o = copnum_verify_options{};
  o->claim = COPNUM_CLAIM_NINE_VERTEX;
  o->jobs = 1;
}

copnum_status copnum_verify_estimate(const copnum_verify_options* o, char** out) {
  COPNUM_REQUIRE(o && out);
  return guarded([&] { *out = dup_string(copnum::verify_estimate(verify_options(o))); });
}

copnum_status copnum_verify(const copnum_verify_options* o, int* passed,
                            char** certificate) {
  COPNUM_REQUIRE(o && passed && certificate);
  return guarded([&] {
    const copnum::Certificate c = copnum::verify_claim(verify_options(o));
    *certificate = dup_string(c.json);
    *passed = c.passed ? 1 : 0;
  });
}

void copnum_request_cancel(void) { copnum::request_cancel(); }

void copnum_reset_cancel(void) { copnum::reset_cancel(); }

}  // extern "C"
