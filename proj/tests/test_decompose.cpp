#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pbm/asmkit.hpp"
#include "pbm/circulation.hpp"
#include "pbm/decompose.hpp"
#include "pbm/oracle.hpp"
#include "support.hpp"

using namespace pbm;

namespace {

IntMatrix sum_of(const std::vector<IntMatrix>& parts, int m, int n) {
  IntMatrix s(m, n);
  for (const IntMatrix& p : parts) {
    for (std::size_t k = 0; k < s.size(); ++k) s.flat(k) += p.flat(k);
  }
  return s;
}

void expect_valid(const PbmInstance& inst, const IntMatrix& a, int k, const Decomposition& d) {
  int mult = 0;
  for (const DecompositionPart& p : d.parts) {
    EXPECT_GE(p.multiplicity, 1);
    mult += p.multiplicity;
  }
  EXPECT_EQ(mult, k);
  const std::vector<IntMatrix> parts = d.expanded();
  ASSERT_EQ(static_cast<int>(parts.size()), k);
  EXPECT_EQ(sum_of(parts, inst.m, inst.n), a);
  const PbmInstance small = shrink(inst, k);
  for (const IntMatrix& p : parts) {
    EXPECT_TRUE(satisfies(small, p));
    EXPECT_NO_THROW(circulation_from_matrix(small, p));
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (a.flat(c) >= 0) {
        EXPECT_GE(p.flat(c), 0);
      }
      if (a.flat(c) <= 0) {
        EXPECT_LE(p.flat(c), 0);
      }
    }
  }
  for (std::size_t q = 1; q < d.parts.size(); ++q) {
    EXPECT_NE(d.parts[q].matrix, d.parts[q - 1].matrix);
  }
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) a(i, j) = rows[i - 1][j - 1];
  }
  return a;
}

// Bounds loosely around the prefix sums of a hidden matrix with entries in
// [-3, 3]; returns the matrix through `a`.
PbmInstance wide_instance(std::mt19937_64& rng, int m, int n, IntMatrix* a) {
  *a = gen::random_matrix(rng, m, n, -3, 3);
  PbmInstance inst;
  inst.m = m;
  inst.n = n;
  inst.phi1 = inst.gamma1 = inst.phi2 = inst.gamma2 = inst.f = inst.g = ExtMatrix(m, n);
  for (int i = 1; i <= m; ++i) {
    long long s = 0;
    for (int j = 1; j <= n; ++j) {
      s += (*a)(i, j);
      inst.phi1(i, j) = gen::coin(rng, 0.1) ? ExtInt::neg_inf() : ExtInt(s - gen::uniform(rng, 0, 2));
      inst.gamma1(i, j) = gen::coin(rng, 0.1) ? ExtInt::pos_inf() : ExtInt(s + gen::uniform(rng, 0, 2));
      inst.f(i, j) = (*a)(i, j) - gen::uniform(rng, 0, 2);
      inst.g(i, j) = (*a)(i, j) + gen::uniform(rng, 0, 2);
    }
  }
  for (int j = 1; j <= n; ++j) {
    long long s = 0;
    for (int i = 1; i <= m; ++i) {
      s += (*a)(i, j);
      inst.phi2(i, j) = s - gen::uniform(rng, 0, 2);
      inst.gamma2(i, j) = s + gen::uniform(rng, 0, 2);
    }
  }
  return validate_instance(inst);
}

}  // namespace

TEST(Shrink, RoundsOutward) {
  PbmInstance inst = make_k_regular(2, 3);
  inst.f = ExtMatrix(2, 2, -4);
  inst.alpha = -5;
  inst.beta = 7;
  const PbmInstance s = shrink(inst, 2);
  EXPECT_EQ(s.gamma1(1, 1), ExtInt(2));
  EXPECT_EQ(s.phi1(1, 2), ExtInt(1));
  EXPECT_EQ(s.gamma1(1, 2), ExtInt(2));
  EXPECT_EQ(s.f(1, 1), ExtInt(-2));
  EXPECT_EQ(s.g(1, 1), ExtInt(1));
  EXPECT_EQ(s.alpha, ExtInt(-3));
  EXPECT_EQ(s.beta, ExtInt(4));
  const PbmInstance open = shrink(make_higher_spin(2, 2), 3);
  EXPECT_EQ(open.f(1, 1), ExtInt::neg_inf());
  EXPECT_EQ(open.g(2, 2), ExtInt::pos_inf());
  EXPECT_THROW(shrink(inst, 0), Error);
}

TEST(Decompose, KOneIsTrivial) {
  const IntMatrix a = from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
  const Decomposition d = decompose(make_asm(3), a, 1);
  ASSERT_EQ(d.parts.size(), 1u);
  EXPECT_EQ(d.parts[0].matrix, a);
  EXPECT_EQ(d.parts[0].multiplicity, 1);
}

TEST(Decompose, TwoRegularOrderTwo) {
  const IntMatrix a = from_rows({{1, 1}, {1, 1}});
  std::vector<IntMatrix> parts = decompose_k_regular_asm(a, 2);
  std::sort(parts.begin(), parts.end());
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(parts[1], from_rows({{1, 0}, {0, 1}}));
}

TEST(Decompose, ZeroMatrixGivesCopies) {
  const PbmInstance inst = make_pasm(2, 3);
  const IntMatrix zero(2, 3);
  for (int k = 1; k <= 4; ++k) {
    const Decomposition d = decompose(inst, zero, k);
    ASSERT_EQ(d.parts.size(), 1u);
    EXPECT_EQ(d.parts[0].matrix, zero);
    EXPECT_EQ(d.parts[0].multiplicity, k);
  }
}

TEST(Decompose, RejectsInfeasibleInput) {
  try {
    decompose(make_asm(2), from_rows({{1, 1}, {0, 0}}), 2);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleInput);
  }
  EXPECT_THROW(decompose(make_asm(2), from_rows({{1, 0}, {0, 1}}), 0), Error);
}

TEST(Decompose, RandomInstancesKeepInvariants) {
  std::mt19937_64 rng(61);
  for (int c = 0; c < 150; ++c) {
    const int m = static_cast<int>(gen::uniform(rng, 1, 3));
    const int n = static_cast<int>(gen::uniform(rng, 1, 4));
    IntMatrix a;
    const PbmInstance inst = wide_instance(rng, m, n, &a);
    const int k = static_cast<int>(gen::uniform(rng, 1, 4));
    expect_valid(inst, a, k, decompose(inst, a, k));
  }
}

TEST(Decompose, KRegularAsmsOfOrderThree) {
  for (int k = 1; k <= 3; ++k) {
    const PbmInstance inst = make_k_regular(3, k);
    for (const IntMatrix& a : oracle::enumerate_pbms(inst)) {
      expect_valid(inst, a, k, decompose(inst, a, k));
      const std::vector<IntMatrix> parts = decompose_k_regular_asm(a, k);
      for (std::size_t p = 0; p < parts.size(); ++p) {
        EXPECT_TRUE(oracle::is_asm(parts[p]));
        for (std::size_t q = 0; q < p; ++q) {
          for (std::size_t cell = 0; cell < a.size(); ++cell) {
            EXPECT_FALSE(parts[p].flat(cell) != 0 && parts[q].flat(cell) != 0);
          }
        }
      }
    }
  }
}

TEST(Decompose, KRegularAsmOfOrderFour) {
  const IntMatrix a = from_rows({{0, 1, 1, 0}, {1, 0, -1, 2}, {1, 0, 1, 0}, {0, 1, 1, 0}});
  ASSERT_FALSE(oracle::is_k_regular_asm(a, 2));  // entry 2 is outside {-1, 0, 1}
  const IntMatrix b = from_rows({{0, 1, 1, 0}, {1, 1, -1, 1}, {1, -1, 1, 1}, {0, 1, 1, 0}});
  ASSERT_TRUE(oracle::is_k_regular_asm(b, 2));
  const std::vector<IntMatrix> parts = decompose_k_regular_asm(b, 2);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(oracle::is_asm(parts[0]));
  EXPECT_TRUE(oracle::is_asm(parts[1]));
  EXPECT_EQ(sum_of(parts, 4, 4), b);
}

TEST(Decompose, RequireKRegular) {
  auto code = [](const IntMatrix& a, int k) {
    try {
      require_k_regular_asm(a, k);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code(from_rows({{1, 1}, {1, 1}}), 2), ErrorCode::kInternal);  // accepted
  EXPECT_EQ(code(from_rows({{1, 0}, {0, 1}}), 2), ErrorCode::kNotKRegular);
  EXPECT_EQ(code(from_rows({{2, 0}, {0, 2}}), 2), ErrorCode::kNotKRegular);
  EXPECT_EQ(code(from_rows({{1, 1, 0}}), 2), ErrorCode::kNotKRegular);
  EXPECT_EQ(code(from_rows({{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}}), 1), ErrorCode::kNotKRegular);
}
