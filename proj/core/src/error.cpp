#include "chromadist/error.hpp"

namespace chromadist {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InfeasibleRegular: return "InfeasibleRegular";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IsolatedEdge: return "IsolatedEdge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BlockTooSmall: return "BlockTooSmall";
    case ErrorCode::BlockNotDisjoint: return "BlockNotDisjoint";
    case ErrorCode::DegreeRatioViolated: return "DegreeRatioViolated";
    case ErrorCode::MinDegreeTooSmall: return "MinDegreeTooSmall";
    case ErrorCode::DeltaBelowFloor: return "DeltaBelowFloor";
  }
  return "Unknown";
}

}  // namespace chromadist
