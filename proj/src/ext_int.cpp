#include "pbm/ext_int.hpp"

#include <ostream>

#include "pbm/error.hpp"

namespace pbm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kBoundOrderViolation: return "BoundOrderViolation";
    case ErrorCode::kIllegalInfinity: return "IllegalInfinity";
    case ErrorCode::kInfinityClash: return "InfinityClash";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kBoundViolation: return "BoundViolation";
    case ErrorCode::kInfeasibleInput: return "InfeasibleInput";
    case ErrorCode::kNotKRegular: return "NotKRegular";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kBadEntries: return "BadEntries";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kPrescriptionOutOfEntryBounds: return "PrescriptionOutOfEntryBounds";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "64-bit overflow in addition");
  }
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "64-bit overflow in multiplication");
  }
  return r;
}

std::int64_t ExtInt::value() const {
  if (kind_ != Kind::kFinite) {
    throw Error(ErrorCode::kInfinityClash, "finite value requested from " + to_string());
  }
  return value_;
}

ExtInt ExtInt::operator-() const {
  switch (kind_) {
    case Kind::kNegInf: return pos_inf();
    case Kind::kPosInf: return neg_inf();
    case Kind::kFinite:
      if (value_ == INT64_MIN) throw Error(ErrorCode::kOverflow, "64-bit overflow in negation");
      return ExtInt(-value_);
  }
  return *this;
}

ExtInt& ExtInt::operator+=(ExtInt rhs) {
  if (kind_ == Kind::kFinite && rhs.kind_ == Kind::kFinite) {
    value_ = checked_add(value_, rhs.value_);
    return *this;
  }
  if ((kind_ == Kind::kNegInf && rhs.kind_ == Kind::kPosInf) ||
      (kind_ == Kind::kPosInf && rhs.kind_ == Kind::kNegInf)) {
    throw Error(ErrorCode::kInfinityClash, "-inf + +inf is undefined");
  }
  if (kind_ == Kind::kFinite) *this = rhs;
  return *this;
}

std::string ExtInt::to_string() const {
  switch (kind_) {
    case Kind::kNegInf: return "-inf";
    case Kind::kPosInf: return "+inf";
    case Kind::kFinite: return std::to_string(value_);
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, ExtInt x) { return os << x.to_string(); }

ExtInt floor_div(ExtInt x, std::int64_t k) {
  if (k <= 0) throw Error(ErrorCode::kBadParams, "divisor must be positive");
  if (!x.is_finite()) return x;
  std::int64_t v = x.value();
  std::int64_t q = v / k;
  if (v % k != 0 && v < 0) --q;
  return q;
}

ExtInt ceil_div(ExtInt x, std::int64_t k) {
  if (k <= 0) throw Error(ErrorCode::kBadParams, "divisor must be positive");
  if (!x.is_finite()) return x;
  std::int64_t v = x.value();
  std::int64_t q = v / k;
  if (v % k != 0 && v > 0) ++q;
  return q;
}

}  // namespace pbm
