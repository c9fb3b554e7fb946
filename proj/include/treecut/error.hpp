#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treecut {

enum class ErrorCode {
  DisconnectedGraph,
  CycleDetected,
  NegativeWeight,
  BadVertexId,
  PartitionMassMismatch,
  EmptyInput,
  NonFiniteCoordinate,
  OddMassForBisection,
  KOutOfRange,
  InstanceTooLargeForOracle,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure the library reports carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by an infeasible problem request rather than bad input.
  bool infeasible() const noexcept {
    return code_ == ErrorCode::OddMassForBisection || code_ == ErrorCode::KOutOfRange;
  }

 private:
  ErrorCode code_;
};

}  // namespace treecut
