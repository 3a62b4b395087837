#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbm {

enum class ErrorCode {
  kDimensionMismatch,
  kBoundOrderViolation,
  kIllegalInfinity,
  kInfinityClash,
  kOverflow,
  kBoundViolation,
  kInfeasibleInput,
  kNotKRegular,
  kBadParams,
  kBadEntries,
  kBudgetExceeded,
  kPrescriptionOutOfEntryBounds,
  kParse,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported as a pbm::Error carrying a code; the
// message names the offending position or quantity where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pbm
