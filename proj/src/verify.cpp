#include "copnum/verify.hpp"

#include "copnum/canonical.hpp"
#include "copnum/constructions.hpp"
#include "json.hpp"

namespace copnum {

namespace {

using nlohmann::json;

int default_horizon(Claim claim) { return claim == Claim::NineVertex ? 9 : 10; }

std::string claim_name(Claim claim) {
  return claim == Claim::NineVertex ? "nine-vertex" : "petersen-unique";
}

json row_summary(const CensusRow& r) {
  return {{"n", r.n},
          {"g", r.g},
          {"g_connected", r.g_connected},
          {"f", r.f},
          {"overflow", r.overflow},
          {"source_hash", r.source_hash}};
}

}  // namespace

std::string verify_estimate(const VerifyOptions& o) {
  const int h = o.horizon > 0 ? o.horizon : default_horizon(o.claim);
  if (o.corpus) return "corpus run: time scales with the corpus size";
  // Single-core timings of this implementation; divide by --jobs.
  if (h <= 8) return "estimated time: a few seconds";
  if (h == 9) return "estimated time: about 15 seconds per core";
  return "estimated time: about 15-20 minutes on one core (checkpointed, resumable)";
}

Certificate verify_claim(const VerifyOptions& o) {
  const int horizon = o.horizon > 0 ? o.horizon : default_horizon(o.claim);
  if (o.claim == Claim::NineVertex && horizon > 9) {
    contract_violation("the nine-vertex claim covers orders up to 9");
  }
  if (!o.corpus && o.claim == Claim::PetersenUnique && horizon != 10) {
    contract_violation("the petersen-unique claim needs the order-10 census");
  }

  CensusOptions co;
  co.n_max = horizon;
  co.k_max = o.claim == Claim::NineVertex ? 2 : 3;
  co.jobs = o.jobs;
  co.corpus = o.corpus;
  co.checkpoint_dir = o.checkpoint_dir;
  co.stop_after = o.stop_after;
  co.progress = o.progress;
  const CensusTable table = run_census(co);

  Certificate cert;
  cert.claim = claim_name(o.claim);
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back(row_summary(r));
    if (!r.complete) cert.failures.push_back("row " + std::to_string(r.n) + " incomplete");
  }
  json witness = nullptr;

  if (o.claim == Claim::NineVertex) {
    for (const auto& r : table.rows) {
      if (r.n > 9) {
        cert.failures.push_back("corpus order " + std::to_string(r.n) +
                                " is outside the claim");
      }
      if (r.overflow > 0) {
        cert.failures.push_back("order " + std::to_string(r.n) + ": " +
                                std::to_string(r.overflow) +
                                " graph(s) need 3 or more cops, e.g. " +
                                r.witnesses.at(3));
      }
    }
  } else {
    const CensusRow* ten = table.row(10);
    for (const auto& r : table.rows) {
      if (r.n < 10 && (r.f[2] > 0 || r.overflow > 0)) {
        cert.failures.push_back("order " + std::to_string(r.n) +
                                " already has a graph needing 3 or more cops");
      }
    }
    if (!ten) {
      cert.failures.push_back("no order-10 row");
    } else {
      if (ten->f[2] != 1) {
        cert.failures.push_back("order 10 has " + std::to_string(ten->f[2]) +
                                " graphs with cop number 3, expected 1");
      }
      if (ten->overflow != 0) {
        cert.failures.push_back("order 10 has graphs needing 4 or more cops");
      }
      if (ten->witnesses.contains(3)) {
        const Graph w = parse_graph6(ten->witnesses.at(3));
        const bool is_petersen = is_isomorphic(w, petersen());
        witness = {{"graph6", ten->witnesses.at(3)},
                   {"canonical_form", canonical_form(w).hex()},
                   {"isomorphic_to_petersen", is_petersen}};
        if (!is_petersen) cert.failures.push_back("witness is not the Petersen graph");
      }
    }
  }

  cert.passed = cert.failures.empty();
  json j = {{"claim", cert.claim},
            {"passed", cert.passed},
            {"horizon", horizon},
            {"k_max", table.k_max},
            {"library_version", kLibraryVersion},
            {"generator_version", table.metadata.generator_version},
            {"solver_version", table.metadata.solver_version},
            {"source", table.metadata.source},
            {"rows", rows},
            {"witness", witness},
            {"failures", cert.failures},
            {"table_hash", hash_hex(fnv1a(render(table, Format::Json)))}};
  cert.json = j.dump(2) + "\n";
  return cert;
}

}  // namespace copnum
