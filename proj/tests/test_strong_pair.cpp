#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "pbm/asmkit.hpp"
#include "pbm/oracle.hpp"
#include "pbm/segments.hpp"
#include "pbm/strong_pair.hpp"
#include "support.hpp"

using namespace pbm;

namespace {

const ExtInt kNeg = ExtInt::neg_inf();
const ExtInt kPos = ExtInt::pos_inf();

bool same(const StrongPairEval& a, const StrongPairEval& b) {
  return a.p1 == b.p1 && a.b1 == b.b1 && a.p2 == b.p2 && a.b2 == b.b2;
}

}  // namespace

TEST(StrongPair, ElementaryOnAsmRow) {
  const std::vector<ExtInt> phi = {0, 0, 1};
  const std::vector<ExtInt> gamma = {1, 1, 1};
  const BoundPair mid = elementary_pair(phi, gamma, 2, 3);
  EXPECT_EQ(mid.lower, ExtInt(0));
  EXPECT_EQ(mid.upper, ExtInt(1));
  const BoundPair pre = elementary_pair(phi, gamma, 1, 2);
  EXPECT_EQ(pre.lower, ExtInt(0));
  EXPECT_EQ(pre.upper, ExtInt(1));
}

TEST(StrongPair, ElementaryPropagatesInfinity) {
  const std::vector<ExtInt> phi = {kNeg, kNeg};
  const std::vector<ExtInt> gamma = {0, 0};
  const BoundPair r = elementary_pair(phi, gamma, 2, 2);
  EXPECT_EQ(r.lower, kNeg);
  EXPECT_EQ(r.upper, kPos);
}

TEST(StrongPair, AsmFullRow) {
  SubsetMask x(3, 3);
  for (int j = 1; j <= 3; ++j) x(1, j) = 1;
  const StrongPairEval e = eval_strong_pair(make_asm(3), x);
  EXPECT_EQ(e.p1, ExtInt(1));
  EXPECT_EQ(e.b1, ExtInt(1));
}

TEST(StrongPair, AsmSingleInteriorCell) {
  const StrongPairEval e = eval_strong_pair(make_asm(3), mask_from_cells(3, 3, {{1, 2}}));
  EXPECT_EQ(e.p1, ExtInt(-1));
  EXPECT_EQ(e.b1, ExtInt(1));
}

TEST(StrongPair, PasmFullGrid) {
  const StrongPairEval e = eval_strong_pair(make_pasm(2, 2), full_mask(2, 2));
  EXPECT_EQ(e.b1, ExtInt(2));
  EXPECT_EQ(e.p1, ExtInt(0));
}

TEST(StrongPair, EmptySetIsZero) {
  std::mt19937_64 rng(31);
  for (int c = 0; c < 20; ++c) {
    gen::RandomSpec spec;
    const PbmInstance inst = gen::random_instance(rng, spec);
    EXPECT_TRUE(same(eval_strong_pair(inst, SubsetMask(inst.m, inst.n)), StrongPairEval{}));
  }
}

TEST(StrongPair, AccessorsMatchEval) {
  const PbmInstance inst = make_asm(3);
  const SubsetMask x = mask_from_cells(3, 3, {{1, 2}, {2, 2}, {3, 1}});
  const StrongPairEval e = eval_strong_pair(inst, x);
  EXPECT_EQ(p1(inst, x), e.p1);
  EXPECT_EQ(b1(inst, x), e.b1);
  EXPECT_EQ(p2(inst, x), e.p2);
  EXPECT_EQ(b2(inst, x), e.b2);
}

TEST(StrongPair, AdditiveOverSeparatedSegments) {
  std::mt19937_64 rng(32);
  for (int c = 0; c < 200; ++c) {
    gen::RandomSpec spec;
    spec.m = 3;
    spec.n = 4;
    spec.inf_prob = 0.0;
    const PbmInstance inst = gen::random_instance(rng, spec);
    const SubsetMask x = gen::random_mask(rng, 3, 4);
    const StrongPairEval whole = eval_strong_pair(inst, x);
    ExtInt p = 0, b = 0;
    for (const Segment& s : maximal_segments(x, Orientation::kHorizontal)) {
      const StrongPairEval part = eval_strong_pair(inst, cover(3, 4, {s}));
      p = p + part.p1;
      b = b + part.b1;
    }
    EXPECT_EQ(whole.p1, p);
    EXPECT_EQ(whole.b1, b);
  }
}

TEST(StrongPair, MatchesRunScanningOracle) {
  std::mt19937_64 rng(33);
  for (int c = 0; c < 300; ++c) {
    gen::RandomSpec spec;
    spec.m = static_cast<int>(gen::uniform(rng, 1, 4));
    spec.n = static_cast<int>(gen::uniform(rng, 1, 4));
    spec.inf_prob = 0.2;
    const PbmInstance inst = gen::random_instance(rng, spec);
    const SubsetMask x = gen::random_mask(rng, spec.m, spec.n);
    const StrongPairEval e = eval_strong_pair(inst, x);
    const oracle::LineBounds o = oracle::scan_bounds(inst, x);
    EXPECT_EQ(e.p1, o.p1);
    EXPECT_EQ(e.b1, o.b1);
    EXPECT_EQ(e.p2, o.p2);
    EXPECT_EQ(e.b2, o.b2);
  }
}

// p and b are the min and max of x(X) over integer points within one
// direction's prefix bounds.
TEST(StrongPair, ExtremesOverOneDirectionPoints) {
  std::mt19937_64 rng(34);
  oracle::EnumerationBudget budget;
  budget.max_range_width = 20;
  for (int c = 0; c < 12; ++c) {
    gen::RandomSpec spec;
    spec.m = static_cast<int>(gen::uniform(rng, 1, 2));
    spec.n = static_cast<int>(gen::uniform(rng, 1, 3));
    spec.inf_prob = 0.0;
    const PbmInstance inst = gen::random_instance(rng, spec);
    const int cells = spec.m * spec.n;
    for (int d = 0; d < 2; ++d) {
      const auto points = oracle::enumerate_one_direction(inst, d == 0, budget);
      ASSERT_FALSE(points.empty());
      for (unsigned bits = 0; bits < (1u << cells); ++bits) {
        const SubsetMask x = mask_from_bits(spec.m, spec.n, bits);
        long long lo = masked_sum(points.front(), x), hi = lo;
        for (const IntMatrix& a : points) {
          lo = std::min(lo, masked_sum(a, x));
          hi = std::max(hi, masked_sum(a, x));
        }
        const StrongPairEval e = eval_strong_pair(inst, x);
        EXPECT_EQ(d == 0 ? e.p1 : e.p2, ExtInt(lo));
        EXPECT_EQ(d == 0 ? e.b1 : e.b2, ExtInt(hi));
      }
    }
  }
}

TEST(StrongPair, LowerNeverExceedsUpper) {
  std::mt19937_64 rng(35);
  for (int c = 0; c < 300; ++c) {
    gen::RandomSpec spec;
    spec.m = 3;
    spec.n = 3;
    spec.inf_prob = 0.0;
    const PbmInstance inst = gen::random_instance(rng, spec);
    const StrongPairEval e = eval_strong_pair(inst, gen::random_mask(rng, 3, 3));
    EXPECT_LE(e.p1, e.b1);
    EXPECT_LE(e.p2, e.b2);
  }
}
