#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surftw {

enum class ErrorCode {
  Disconnected,
  NotTwoCell,
  TooLarge,
  BadPartition,
  BadSubset,
  BadEdge,
  BadTree,
  BadInput,
  BorderNotCovered,
  NotPiConnected,
  NotTroublesome,
  NotInternal,
  NotPtree,
  NoEdges,
  StructureMismatch,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::NotTwoCell: return "NOT_TWO_CELL";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::BadPartition: return "BAD_PARTITION";
    case ErrorCode::BadSubset: return "BAD_SUBSET";
    case ErrorCode::BadEdge: return "BAD_EDGE";
    case ErrorCode::BadTree: return "BAD_TREE";
    case ErrorCode::BadInput: return "BAD_INPUT";
    case ErrorCode::BorderNotCovered: return "BORDER_NOT_COVERED";
    case ErrorCode::NotPiConnected: return "NOT_PI_CONNECTED";
    case ErrorCode::NotTroublesome: return "NOT_TROUBLESOME";
    case ErrorCode::NotInternal: return "NOT_INTERNAL";
    case ErrorCode::NotPtree: return "NOT_PTREE";
    case ErrorCode::NoEdges: return "NO_EDGES";
    case ErrorCode::StructureMismatch: return "STRUCTURE_MISMATCH";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace surftw
