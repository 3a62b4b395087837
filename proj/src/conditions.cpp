#include "pbm/conditions.hpp"

#include <string>

#include "pbm/strong_pair.hpp"

namespace pbm {

std::string_view inequality_id(Inequality which) {
  switch (which) {
    case Inequality::kRowColumn: return "gen1a";
    case Inequality::kColumnRow: return "gen1b";
    case Inequality::kTotalLower: return "gen1alfa";
    case Inequality::kTotalUpper: return "gen1beta";
  }
  return "?";
}

Inequality inequality_from_id(std::string_view id) {
  for (Inequality q : kAllInequalities) {
    if (inequality_id(q) == id) return q;
  }
  throw Error(ErrorCode::kParse, "unknown inequality id " + std::string(id));
}

ExtInt InequalityValue::slack() const {
  if (lhs.is_neg_inf() || rhs.is_pos_inf()) return ExtInt::pos_inf();
  return rhs - lhs;
}

InequalityValue evaluate(const PbmInstance& inst, const SubsetMask& x1, const SubsetMask& x2,
                         Inequality which) {
  const StrongPairEval e1 = eval_strong_pair(inst, x1);
  const StrongPairEval e2 = eval_strong_pair(inst, x2);
  switch (which) {
    case Inequality::kRowColumn:
      return {which, e1.p1 + masked_sum(inst.f, minus(x2, x1)),
              e2.b2 + masked_sum(inst.g, minus(x1, x2))};
    case Inequality::kColumnRow:
      return {which, e2.p2 + masked_sum(inst.f, minus(x1, x2)),
              e1.b1 + masked_sum(inst.g, minus(x2, x1))};
    case Inequality::kTotalLower: {
      const SubsetMask outside = intersect(complement(x1), complement(x2));
      return {which, inst.alpha,
              e1.b1 + e2.b2 + masked_sum(inst.g, outside) - masked_sum(inst.f, intersect(x1, x2))};
    }
    case Inequality::kTotalUpper: {
      const SubsetMask outside = intersect(complement(x1), complement(x2));
      return {which,
              e1.p1 + e2.p2 + masked_sum(inst.f, outside) - masked_sum(inst.g, intersect(x1, x2)),
              inst.beta};
    }
  }
  throw Error(ErrorCode::kInternal, "unknown inequality");
}

}  // namespace pbm
