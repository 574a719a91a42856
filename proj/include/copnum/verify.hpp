#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "copnum/census.hpp"

namespace copnum {

enum class Claim {
  /// Every connected graph of order <= horizon (<= 9) has cop number <= 2.
  NineVertex,
  /// Exactly one connected graph of order 10 needs 3 cops, it is the Petersen
  /// graph, and no smaller connected graph needs 3.
  PetersenUnique,
};

struct VerifyOptions {
  Claim claim = Claim::NineVertex;
  /// Largest order examined; 0 picks 9 or 10 by claim.
  int horizon = 0;
  int jobs = 1;
  std::optional<std::filesystem::path> checkpoint_dir;
  /// Restricts the check to the graphs of one corpus.
  std::optional<std::filesystem::path> corpus;
  std::optional<std::uint64_t> stop_after;
  ProgressFn progress;
};

struct Certificate {
  std::string claim;
  bool passed = false;
  std::vector<std::string> failures;
  /// Machine-readable certificate: counts, witness forms and source hashes.
  std::string json;
};

/// Runs the census behind a claim. Interruption propagates as
/// CensusInterrupted and no certificate is produced.
Certificate verify_claim(const VerifyOptions& options);

/// Human-readable runtime estimate printed before long runs.
std::string verify_estimate(const VerifyOptions& options);

}  // namespace copnum
