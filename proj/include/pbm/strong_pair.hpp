#pragma once

#include <span>

#include "pbm/ext_int.hpp"
#include "pbm/grid.hpp"
#include "pbm/instance.hpp"
#include "pbm/segments.hpp"

namespace pbm {

/// Tightest lower/upper bound on the sum over a segment [h, k] implied by
/// prefix bounds phi <= prefix <= gamma on one line:
///   lower = phi(k) - gamma(h-1),  upper = gamma(k) - phi(h-1),
/// with phi(0) = gamma(0) = 0. `phi`/`gamma` are 0-based spans of the line,
/// `h`/`k` are 1-based.
struct BoundPair {
  ExtInt lower;
  ExtInt upper;
};

BoundPair elementary_pair(std::span<const ExtInt> phi, std::span<const ExtInt> gamma, int h,
                          int k);

/// Values of the two strong pairs on one subset: (p1, b1) from the horizontal
/// prefix bounds, (p2, b2) from the vertical ones.
struct StrongPairEval {
  ExtInt p1 = 0;
  ExtInt b1 = 0;
  ExtInt p2 = 0;
  ExtInt b2 = 0;
};

// Sum of elementary pairs over the maximal segments of `x` in each direction.
StrongPairEval eval_strong_pair(const PbmInstance& inst, const SubsetMask& x);

ExtInt p1(const PbmInstance& inst, const SubsetMask& x);
ExtInt b1(const PbmInstance& inst, const SubsetMask& x);
ExtInt p2(const PbmInstance& inst, const SubsetMask& x);
ExtInt b2(const PbmInstance& inst, const SubsetMask& x);

}  // namespace pbm
