#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tw {

enum class ErrorCode {
  NotATree,
  IdOutOfRange,
  ParseError,
  OrderTooSmall,
  InconsistentOrder,
  BadDiameter,
  BadLeafCount,
  BadArg,
  InfeasibleShape,
  Infeasible,
  BadPos,
  ParityMismatch,
  BadSpec,
  BadId,
  TooLarge,
  TooShort,
  EmptyClass,
  NotCaterpillar,
  UnknownCheck,
  RangeTooLarge,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tw
