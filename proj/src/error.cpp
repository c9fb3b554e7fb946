#include "treecut/error.hpp"

namespace treecut {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::BadVertexId: return "BadVertexId";
    case ErrorCode::PartitionMassMismatch: return "PartitionMassMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::OddMassForBisection: return "OddMassForBisection";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::InstanceTooLargeForOracle: return "InstanceTooLargeForOracle";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace treecut
