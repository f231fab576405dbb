#pragma once

#include <stdexcept>
#include <string>

namespace grl {

enum class ErrorCode {
  KindMismatch,
  NotMember,
  NotSubgroup,
  NotNormal,
  InvalidGroup,
  InvalidField,
  FieldMismatch,
  DivisionByZero,
  DimensionMismatch,
  InvalidAlgebra,
  InvalidGrading,
  InvalidTwist,
  InvalidSpec,
  NotUnital,
  InfiniteGroup,
  DegreeOutsideMonoid,
  BudgetExceeded,
  Unsupported,
  UnknownFixture,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace grl
