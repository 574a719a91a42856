#pragma once

#include <stdexcept>
#include <string>

namespace copnum {

/// Failure classes surfaced by the library. The C API maps each one onto a
/// distinct status code, and the CLI onto a distinct exit code.
enum class ErrorCode {
  Parse,
  Contract,
  Disconnected,
  SolverCap,
  NoWinningMove,
  Integrity,
  CheckpointMismatch,
  Io,
  Interrupted,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// graph6 decoding faults, kept distinct so corpus tooling can report them.
enum class Graph6Fault {
  Empty,
  BadHeader,
  OrderOutOfRange,
  BadCharacter,
  Truncated,
  NonzeroPadding,
  TrailingBytes,
};

class Graph6Error : public Error {
 public:
  Graph6Error(Graph6Fault fault, const std::string& what)
      : Error(ErrorCode::Parse, what), fault_(fault) {}

  Graph6Fault fault() const noexcept { return fault_; }

 private:
  Graph6Fault fault_;
};

[[noreturn]] inline void contract_violation(const std::string& what) {
  throw Error(ErrorCode::Contract, what);
}

}  // namespace copnum
