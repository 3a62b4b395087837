#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "pbm/asmkit.hpp"
#include "pbm/oracle.hpp"
#include "support.hpp"

using namespace pbm;

namespace {

std::vector<IntMatrix> filtered(const std::vector<IntMatrix>& all,
                                const std::function<bool(const IntMatrix&)>& keep) {
  std::vector<IntMatrix> out;
  for (const IntMatrix& a : all) {
    if (keep(a)) out.push_back(a);
  }
  return out;
}

// Every integer m x n matrix with entries in [lo, hi], sorted.
std::vector<IntMatrix> all_matrices(int m, int n, long long lo, long long hi) {
  std::vector<IntMatrix> out;
  IntMatrix a(m, n, lo);
  while (true) {
    out.push_back(a);
    std::size_t k = a.size();
    while (k > 0 && a.flat(k - 1) == hi) a.flat(--k) = lo;
    if (k == 0) break;
    ++a.flat(k - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Row prefixes in [0, row_cap(i,j)] ending at row_sum(i); columns likewise.
bool prefix_class(const IntMatrix& a, const std::function<long long(int, int)>& row_cap,
                  const std::function<long long(int)>& row_sum,
                  const std::function<long long(int, int)>& col_cap,
                  const std::function<long long(int)>& col_sum) {
  for (int i = 1; i <= a.rows(); ++i) {
    long long s = 0;
    for (int j = 1; j <= a.cols(); ++j) {
      s += a(i, j);
      if (s < 0 || s > row_cap(i, j)) return false;
    }
    if (s != row_sum(i)) return false;
  }
  for (int j = 1; j <= a.cols(); ++j) {
    long long s = 0;
    for (int i = 1; i <= a.rows(); ++i) {
      s += a(i, j);
      if (s < 0 || s > col_cap(i, j)) return false;
    }
    if (s != col_sum(j)) return false;
  }
  return true;
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) a(i, j) = rows[i - 1][j - 1];
  }
  return a;
}

bool compatible(const IntMatrix& a, const SPartition& part) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const long long v = a.flat(k);
    switch (part.flat(k)) {
      case PartClass::kZero: if (v != 0) return false; break;
      case PartClass::kPlusOne: if (v != 1) return false; break;
      case PartClass::kMinusOne: if (v != -1) return false; break;
      case PartClass::kPlus: if (v < 0) return false; break;
      case PartClass::kMinus: if (v > 0) return false; break;
      case PartClass::kFree: break;
    }
  }
  return true;
}

}  // namespace

TEST(Kinds, AsmExamples) {
  EXPECT_EQ(oracle::enumerate_pbms(make_asm(1)), std::vector<IntMatrix>{IntMatrix(1, 1, 1)});
  EXPECT_EQ(oracle::enumerate_pbms(make_asm(3)).size(), 7u);
  EXPECT_EQ(oracle::enumerate_pbms(make_k_regular(2, 2)),
            std::vector<IntMatrix>{from_rows({{1, 1}, {1, 1}})});
}

TEST(Kinds, SignClassesMatchPredicates) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const auto signs = oracle::all_sign_matrices(m, n);
      EXPECT_EQ(oracle::enumerate_pbms(make_pasm(m, n)), filtered(signs, oracle::is_pasm));
      EXPECT_EQ(oracle::enumerate_pbms(make_aval_sign(m, n)),
                filtered(signs, oracle::is_aval_sign));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    const auto signs = oracle::all_sign_matrices(n, n);
    EXPECT_EQ(oracle::enumerate_pbms(make_asm(n)), filtered(signs, oracle::is_asm));
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(oracle::enumerate_pbms(make_k_regular(n, k)),
                filtered(signs, [k](const IntMatrix& a) { return oracle::is_k_regular_asm(a, k); }));
    }
  }
}

TEST(Kinds, HigherSpin) {
  for (const auto& [n, r] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    const auto cap = [r](int, int) { return static_cast<long long>(r); };
    const auto sum = [r](int) { return static_cast<long long>(r); };
    const auto expected = filtered(all_matrices(n, n, -r, r), [&](const IntMatrix& a) {
      return prefix_class(a, cap, sum, cap, sum);
    });
    EXPECT_EQ(oracle::enumerate_pbms(make_higher_spin(n, r)), expected);
  }
}

TEST(Kinds, BrualdiDahl) {
  const std::vector<long long> r = {1, 2};
  const std::vector<long long> s = {1, 1, 1};
  const auto expected =
      filtered(oracle::all_sign_matrices(2, 3), [&](const IntMatrix& a) {
        return prefix_class(
            a, [&](int i, int) { return r[static_cast<std::size_t>(i - 1)]; },
            [&](int i) { return r[static_cast<std::size_t>(i - 1)]; },
            [&](int, int j) { return s[static_cast<std::size_t>(j - 1)]; },
            [&](int j) { return s[static_cast<std::size_t>(j - 1)]; });
      });
  EXPECT_EQ(oracle::enumerate_pbms(make_brualdi_dahl(r, s)), expected);
  EXPECT_FALSE(expected.empty());
}

TEST(Kinds, SumMajorized) {
  const IntMatrix b = from_rows({{1, 1}, {1, 2}});
  const auto expected = filtered(all_matrices(2, 2, -2, 2), [&](const IntMatrix& a) {
    return prefix_class(
        a, [&](int i, int j) { return b(i, j); }, [&](int i) { return b(i, 2); },
        [&](int i, int j) { return b(i, j); }, [&](int j) { return b(2, j); });
  });
  EXPECT_EQ(oracle::enumerate_pbms(make_sum_majorized(b)), expected);
  EXPECT_FALSE(expected.empty());
}

TEST(Kinds, BadParams) {
  auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code([] { make_asm(0); }), ErrorCode::kBadParams);
  EXPECT_EQ(code([] { make_k_regular(2, 0); }), ErrorCode::kBadParams);
  EXPECT_EQ(code([] { make_brualdi_dahl({-1}, {1}); }), ErrorCode::kBadParams);
  EXPECT_EQ(code([] { make_sum_majorized(IntMatrix(2, 3)); }), ErrorCode::kBadParams);
  EXPECT_EQ(code([] { make_sum_majorized(IntMatrix(1, 1, -1)); }), ErrorCode::kBadParams);
}

TEST(Partition, Codes) {
  for (const char* code : {"0", "+1", "-1", "+", "-", "F"}) {
    EXPECT_EQ(part_class_code(part_class_from_code(code)), code);
  }
  EXPECT_THROW(part_class_from_code("x"), Error);
  SPartition part(2, 2, PartClass::kFree);
  part(1, 2) = PartClass::kZero;
  EXPECT_EQ(part_mask(part, PartClass::kZero), mask_from_cells(2, 2, {{1, 2}}));
}

TEST(Compatible, AllFreeOrderTwo) {
  const AsmResult r = compatible_asm(SPartition(2, 2, PartClass::kFree));
  ASSERT_TRUE(r.result.feasible());
  EXPECT_TRUE(oracle::is_asm(*r.result.matrix));
  EXPECT_FALSE(r.family.has_value());
}

TEST(Compatible, ForcedMinusOneOrderTwo) {
  SPartition part(2, 2, PartClass::kFree);
  part(1, 1) = PartClass::kMinusOne;
  const AsmResult r = compatible_asm(part);
  ASSERT_FALSE(r.result.feasible());
  ASSERT_TRUE(r.family.has_value());
  EXPECT_TRUE(r.family->violates());
  EXPECT_TRUE(r.family->s_feasible);
  EXPECT_LT(r.family->size, 2 + r.family->minus_one_uncovered + r.family->plus_one_doubled);
}

TEST(Compatible, CenterPlusOneOrderThree) {
  SPartition part(3, 3, PartClass::kFree);
  part(2, 2) = PartClass::kPlusOne;
  const AsmResult r = compatible_asm(part);
  ASSERT_TRUE(r.result.feasible());
  EXPECT_EQ((*r.result.matrix)(2, 2), 1);
  EXPECT_TRUE(oracle::is_asm(*r.result.matrix));
}

TEST(Compatible, RandomPartitionsAgreeWithOracle) {
  std::mt19937_64 rng(71);
  const PartClass classes[] = {PartClass::kZero, PartClass::kPlusOne, PartClass::kMinusOne,
                               PartClass::kPlus, PartClass::kMinus, PartClass::kFree};
  std::discrete_distribution<int> pick({2, 1, 1, 2, 2, 6});
  int infeasible = 0;
  for (int c = 0; c < 400; ++c) {
    const int n = static_cast<int>(gen::uniform(rng, 1, 4));
    SPartition part(n, n);
    for (std::size_t k = 0; k < part.size(); ++k) part.flat(k) = classes[pick(rng)];
    oracle::EnumerationBudget budget;
    budget.max_cells = 16;
    const auto asms = oracle::enumerate_pbms(make_asm(n), budget);
    const bool exists = std::any_of(asms.begin(), asms.end(),
                                    [&](const IntMatrix& a) { return compatible(a, part); });
    const AsmResult r = compatible_asm(part);
    ASSERT_EQ(r.result.feasible(), exists);
    if (exists) {
      EXPECT_TRUE(oracle::is_asm(*r.result.matrix));
      EXPECT_TRUE(compatible(*r.result.matrix, part));
      continue;
    }
    ++infeasible;
    ASSERT_TRUE(r.family.has_value());
    EXPECT_TRUE(r.family->s_feasible);
    EXPECT_TRUE(r.family->violates());
    EXPECT_EQ(r.family->size,
              static_cast<int>(r.family->horizontal.size() + r.family->vertical.size()));
  }
  EXPECT_GT(infeasible, 50);
}

TEST(Family, DuplicatedSingletonCountsTwice) {
  SPartition part(2, 2, PartClass::kFree);
  part(1, 1) = PartClass::kPlusOne;
  const SubsetMask cell = mask_from_cells(2, 2, {{1, 1}});
  const SegmentFamily fam = make_family(part, cell, cell);
  EXPECT_EQ(fam.size, 2);
  EXPECT_EQ(fam.plus_one_doubled, 1);
  EXPECT_FALSE(fam.s_feasible);  // free cells left uncovered
}

TEST(Subordinate, Examples) {
  const AsmResult ones = subordinate_asm(IntMatrix(3, 3, 1));
  ASSERT_TRUE(ones.result.feasible());
  const IntMatrix& p = *ones.result.matrix;
  EXPECT_TRUE(oracle::is_asm(p));
  EXPECT_EQ(std::count(p.data().begin(), p.data().end(), 1), 3);

  const IntMatrix eye = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const AsmResult id = subordinate_asm(eye);
  ASSERT_TRUE(id.result.feasible());
  EXPECT_EQ(*id.result.matrix, eye);

  const IntMatrix zero_row = from_rows({{0, 0, 0}, {1, 1, 1}, {1, 1, 1}});
  const AsmResult none = subordinate_asm(zero_row);
  ASSERT_FALSE(none.result.feasible());
  ASSERT_TRUE(none.family.has_value());
  EXPECT_LT(none.family->size, 3);
  EXPECT_TRUE(oracle::enumerate_subordinates(zero_row).empty());
}

TEST(Subordinate, CertificateCoversPlusEntries) {
  std::mt19937_64 rng(72);
  std::discrete_distribution<int> entry({2, 3, 5});
  int infeasible = 0;
  for (int c = 0; c < 200; ++c) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 4));
    IntMatrix x(n, n);
    for (std::size_t k = 0; k < x.size(); ++k) x.flat(k) = entry(rng) - 1;
    const AsmResult r = subordinate_asm(x);
    if (r.result.feasible()) {
      const IntMatrix& a = *r.result.matrix;
      EXPECT_TRUE(oracle::is_asm(a));
      for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_TRUE(a.flat(k) == 0 || a.flat(k) == x.flat(k));
      }
      continue;
    }
    ++infeasible;
    const SegmentFamily& fam = *r.family;
    EXPECT_LT(fam.size, n);
    SubsetMask h = cover(n, n, fam.horizontal), v = cover(n, n, fam.vertical);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (x(i, j) == 1) {
          EXPECT_TRUE(h(i, j) || v(i, j));
        }
        if (x(i, j) == -1) {
          EXPECT_FALSE(h(i, j) && v(i, j));
        }
      }
    }
  }
  EXPECT_GT(infeasible, 20);
}

TEST(Subordinate, BadEntries) {
  try {
    subordinate_asm(from_rows({{2, 0}, {0, 1}}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadEntries);
  }
  EXPECT_THROW(subordinate_partition(IntMatrix(2, 3)), Error);
  EXPECT_THROW(max_plus_ones_subordinate(from_rows({{0, -2}, {1, 0}})), Error);
}

TEST(MaxPlusOnes, Examples) {
  const auto two = max_plus_ones_subordinate(IntMatrix(2, 2, 1));
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->count, 2);
  const auto three = max_plus_ones_subordinate(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  ASSERT_TRUE(three.has_value());
  EXPECT_EQ(three->count, 3);
  const IntMatrix x = from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
  const auto diamond = max_plus_ones_subordinate(x);
  ASSERT_TRUE(diamond.has_value());
  EXPECT_EQ(diamond->count, 4);
  EXPECT_EQ(diamond->matrix, x);
  EXPECT_FALSE(max_plus_ones_subordinate(IntMatrix(2, 2, 0)).has_value());
}

TEST(Wasm, PatternStrings) {
  for (const char* s : {"++", "--", "+-", "-+"}) EXPECT_EQ(wing_to_string(wing_from_string(s)), s);
  EXPECT_THROW(wing_from_string("+"), Error);
}

TEST(Wasm, OneByOne) {
  const auto pp = oracle::enumerate_pbms(
      wasm_instance({WingPattern::kPlusPlus}, {WingPattern::kPlusPlus}));
  EXPECT_EQ(pp, std::vector<IntMatrix>{IntMatrix(1, 1, 1)});
  const auto mm = oracle::enumerate_pbms(
      wasm_instance({WingPattern::kMinusMinus}, {WingPattern::kMinusMinus}));
  EXPECT_EQ(mm, std::vector<IntMatrix>{IntMatrix(1, 1, -1)});
}

// The encoded feasible set equals the direct wing/alternation definition.
TEST(Wasm, FeasibleSetsMatchDefinition) {
  const WingPattern kinds[] = {WingPattern::kPlusPlus, WingPattern::kMinusMinus,
                               WingPattern::kPlusMinus, WingPattern::kMinusPlus};
  std::mt19937_64 rng(73);
  for (const auto& [m, n] : {std::pair{1, 3}, {3, 1}, {2, 3}, {3, 3}}) {
    const auto signs = oracle::all_sign_matrices(m, n);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<WingPattern> rows, cols;
      for (int i = 0; i < m; ++i) rows.push_back(kinds[gen::uniform(rng, 0, 3)]);
      for (int j = 0; j < n; ++j) cols.push_back(kinds[gen::uniform(rng, 0, 3)]);
      const auto expected = filtered(
          signs, [&](const IntMatrix& a) { return oracle::is_wasm(a, rows, cols); });
      const PbmInstance inst = wasm_instance(rows, cols);
      EXPECT_EQ(oracle::enumerate_pbms(inst), expected);
      EXPECT_EQ(solve(inst).feasible(), !expected.empty());
    }
  }
}
