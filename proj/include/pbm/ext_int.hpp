#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace pbm {

/// Integer extended by -inf and +inf.
///
/// Finite arithmetic is checked 64-bit: overflow throws ErrorCode::kOverflow
/// instead of wrapping. Adding opposite infinities throws
/// ErrorCode::kInfinityClash.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : kind_(Kind::kFinite), value_(v) {}  // NOLINT

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::kNegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::kPosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  // Throws kInfinityClash when called on an infinity.
  std::int64_t value() const;

  ExtInt operator-() const;
  ExtInt& operator+=(ExtInt rhs);
  ExtInt& operator-=(ExtInt rhs) { return *this += -rhs; }

  friend ExtInt operator+(ExtInt a, ExtInt b) { return a += b; }
  friend ExtInt operator-(ExtInt a, ExtInt b) { return a -= b; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::kFinite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  // "-inf", "+inf" or the decimal value.
  std::string to_string() const;

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  std::int64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ExtInt x);

// Rounding divisions by a positive integer; infinities are preserved.
ExtInt floor_div(ExtInt x, std::int64_t k);
ExtInt ceil_div(ExtInt x, std::int64_t k);

// Checked finite helpers shared by the solvers.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace pbm
