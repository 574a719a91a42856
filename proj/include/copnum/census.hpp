#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copnum/enumeration.hpp"

namespace copnum {

inline constexpr std::string_view kLibraryVersion = "1.0.0";
inline constexpr std::string_view kGeneratorVersion = "vertex-augmentation/1";
inline constexpr std::string_view kSolverVersion = "retrograde-bfs/1";

/// Counts for one order. f[k-1] holds f_k; `overflow` counts connected graphs
/// needing more than k_max cops.
struct CensusRow {
  int n = 0;
  std::uint64_t g = 0;
  std::uint64_t g_connected = 0;
  std::vector<std::uint64_t> f;
  std::uint64_t overflow = 0;
  bool complete = false;
  /// Source items consumed so far (equals g on complete rows).
  std::uint64_t processed = 0;
  /// Class (1..k_max, or k_max + 1 for overflow) -> canonical graph6 of the
  /// first graph in stream order with that class.
  std::map<int, std::string> witnesses;
  /// Content hash (hex) of the graph source the row was computed from.
  std::string source_hash;

  bool operator==(const CensusRow&) const = default;
};

struct CensusMetadata {
  std::string generator_version{kGeneratorVersion};
  std::string solver_version{kSolverVersion};
  std::string source = "generated";
  /// Not rendered unless asked for, so resumed and uninterrupted runs
  /// serialize identically.
  double wall_time_seconds = 0.0;

  bool operator==(const CensusMetadata& o) const {
    return generator_version == o.generator_version &&
           solver_version == o.solver_version && source == o.source;
  }
};

struct CensusTable {
  int k_max = 0;
  std::vector<CensusRow> rows;
  CensusMetadata metadata;

  const CensusRow* row(int n) const;
  bool operator==(const CensusTable&) const = default;
};

/// 0 for disconnected graphs, otherwise min(c(G), k_max + 1).
int census_class(const Graph& g, int k_max);

/// Consumes the rest of `stream` into one row (single worker, no checkpoint).
CensusRow census(GraphStream& stream, int k_max);

struct CensusOptions {
  int n_max = 8;
  int k_max = 3;
  int jobs = 1;
  /// When set, the census covers this corpus instead of generated orders.
  std::optional<std::filesystem::path> corpus;
  std::optional<std::filesystem::path> checkpoint_dir;
  std::uint64_t checkpoint_interval = 100'000;
  /// Stop as if interrupted once this many graphs were classified in this
  /// invocation.
  std::optional<std::uint64_t> stop_after;
  ProgressFn progress;
};

/// Thrown when a run is interrupted; carries the table so far (incomplete
/// rows flagged). The checkpoint, if any, is already on disk.
class CensusInterrupted : public Error {
 public:
  explicit CensusInterrupted(CensusTable partial)
      : Error(ErrorCode::Interrupted, "census interrupted; resume from the checkpoint"),
        partial_(std::move(partial)) {}
  const CensusTable& partial() const { return partial_; }

 private:
  CensusTable partial_;
};

/// Multi-order census with batch-parallel classification and checkpointing.
/// Output is identical for any job count and across interruption/resume.
CensusTable run_census(const CensusOptions& options);

/// Cooperative cancellation for long runs (safe to call from a signal
/// handler).
void request_cancel() noexcept;
void reset_cancel() noexcept;
bool cancel_requested() noexcept;

struct MinOrderEntry {
  int k = 0;
  /// Least n with some graph of cop number >= k; absent beyond the horizon.
  std::optional<int> m;
  /// Least n with some graph of cop number exactly k.
  std::optional<int> M;
  std::optional<std::string> m_witness;
  std::optional<std::string> M_witness;
};

struct MinOrderReport {
  int horizon = 0;
  std::vector<MinOrderEntry> entries;  // k = 1..k_max
};

/// Requires complete rows for n = 1..H with no gaps; fails with Integrity
/// otherwise (including an empty table).
MinOrderReport derive_min_orders(const CensusTable& table);
std::string render_min_orders(const MinOrderReport& report);

enum class Format { Csv, Json, Text };

std::string render(const CensusTable& table, Format format,
                   bool include_timing = false);
/// Inverse of render(..., Format::Json).
CensusTable parse_census_json(std::string_view json);

}  // namespace copnum
