#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chromadist {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  EmptyGraph,
  InvalidVertex,
  InfeasibleRegular,
  SizeCap,
  Parse,
  InvalidArgument,
  IsolatedEdge,
  BudgetExceeded,
  BlockTooSmall,
  BlockNotDisjoint,
  DegreeRatioViolated,
  MinDegreeTooSmall,
  DeltaBelowFloor,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Error raised by every library operation. The code is machine readable and
/// drives the CLI exit status; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chromadist
