#pragma once

#include <array>
#include <string_view>

#include "pbm/ext_int.hpp"
#include "pbm/grid.hpp"
#include "pbm/instance.hpp"

namespace pbm {

/// The four necessary-and-sufficient inequalities for the existence of a
/// bounded PBM, each evaluated for a pair of subsets (X1, X2):
///   kRowColumn:  p1(X1) + f(X2-X1) <= b2(X2) + g(X1-X2)
///   kColumnRow:  p2(X2) + f(X1-X2) <= b1(X1) + g(X2-X1)
///   kTotalLower: alpha <= b1(X1) + b2(X2) + g(~X1 & ~X2) - f(X1 & X2)
///   kTotalUpper: p1(X1) + p2(X2) + f(~X1 & ~X2) - g(X1 & X2) <= beta
/// Their external ids are "gen1a", "gen1b", "gen1alfa", "gen1beta".
enum class Inequality { kRowColumn = 0, kColumnRow = 1, kTotalLower = 2, kTotalUpper = 3 };

inline constexpr std::array<Inequality, 4> kAllInequalities = {
    Inequality::kRowColumn, Inequality::kColumnRow, Inequality::kTotalLower,
    Inequality::kTotalUpper};

std::string_view inequality_id(Inequality which);
// Throws kParse for an unknown id.
Inequality inequality_from_id(std::string_view id);

/// One inequality normalised as lhs <= rhs. lhs is never +inf and rhs never
/// -inf for a validated instance, so `holds` is well defined; an infinite side
/// makes the inequality hold vacuously.
struct InequalityValue {
  Inequality which;
  ExtInt lhs;
  ExtInt rhs;

  bool holds() const { return lhs <= rhs; }
  // rhs - lhs, or +inf when vacuous.
  ExtInt slack() const;
};

InequalityValue evaluate(const PbmInstance& inst, const SubsetMask& x1, const SubsetMask& x2,
                         Inequality which);

}  // namespace pbm
