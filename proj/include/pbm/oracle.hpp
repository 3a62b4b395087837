#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pbm/asmkit.hpp"
#include "pbm/ext_int.hpp"
#include "pbm/grid.hpp"
#include "pbm/instance.hpp"

// Exhaustive reference implementations. Nothing here calls the segment,
// strong-pair, condition or circulation code; results are checked against
// those modules in the tests.
namespace pbm::oracle {

struct EnumerationBudget {
  int max_cells = 9;
  long long max_range_width = 5;         // values per cell
  long long max_matrices = 100000000;    // matrices produced or search nodes visited
};

/// Finite per-cell range implied by f, g and the prefix bounds of both
/// directions. Throws kBudgetExceeded where a range stays infinite.
struct EntryBox {
  IntMatrix lo;
  IntMatrix hi;
};
EntryBox entry_envelope(const PbmInstance& inst);

/// Every integer matrix meeting all bounds of the instance, sorted
/// lexicographically. `prune` abandons partial assignments whose prefixes
/// can no longer be completed.
std::vector<IntMatrix> enumerate_pbms(const PbmInstance& inst, const EnumerationBudget& budget = {},
                                      bool prune = true);

/// Integer matrices whose horizontal (or vertical) prefix sums alone stay
/// within bounds; the other direction and the entry/total bounds are ignored.
std::vector<IntMatrix> enumerate_one_direction(const PbmInstance& inst, bool horizontal,
                                               const EnumerationBudget& budget);

// Direct check of every bound.
bool meets_bounds(const PbmInstance& inst, const IntMatrix& a);

/// p and b of one direction for a subset, by scanning each line for runs.
struct LineBounds {
  ExtInt p1 = 0, b1 = 0, p2 = 0, b2 = 0;
};
LineBounds scan_bounds(const PbmInstance& inst, const SubsetMask& x);

/// Smallest slack found for one inequality and the pair attaining it.
/// slack = rhs - lhs, +inf when the inequality holds vacuously.
struct WorstPair {
  SubsetMask x1;
  SubsetMask x2;
  ExtInt lhs = 0;
  ExtInt rhs = 0;
  ExtInt slack = ExtInt::pos_inf();

  bool violated() const { return slack < ExtInt(0); }
};

/// Worst pair for each of the four inequalities (order: row-column,
/// column-row, total lower, total upper). All pairs are scanned up to 8
/// cells; from 9 to 12 cells `samples` random pairs are drawn instead.
struct ConditionScan {
  std::array<WorstPair, 4> worst;
  bool exhaustive = true;

  bool all_hold() const;
};
ConditionScan brute_force_condition(const PbmInstance& inst, long long samples = 200000,
                                    std::uint64_t seed = 0);

/// Brute-force extremes of the total sum formula:
///   max = min over pairs of b1(X1) + b2(X2) + g(~X1 & ~X2) - f(X1 & X2)
///   min = max over pairs of p1(X1) + p2(X2) + f(~X1 & ~X2) - g(X1 & X2)
struct TotalSumBounds {
  ExtInt max;
  ExtInt min;
};
TotalSumBounds total_sum_formula(const PbmInstance& inst);

/// All ASMs obtained from `x` by zeroing nonzero entries, sorted.
std::vector<IntMatrix> enumerate_subordinates(const IntMatrix& x, int max_nonzeros = 20);

bool is_asm(const IntMatrix& a);
bool is_pasm(const IntMatrix& a);
bool is_k_regular_asm(const IntMatrix& a, int k);
bool is_aval_sign(const IntMatrix& a);

/// Nonzeros alternate along every line and each line's first and last
/// nonzero have the prescribed signs. An all-zero line is accepted exactly
/// for the patterns whose line sum is 0, (+,-) and (-,+).
bool is_wasm(const IntMatrix& a, const std::vector<WingPattern>& rows,
             const std::vector<WingPattern>& cols);

/// Every (0, +-1) matrix of the given shape, sorted.
std::vector<IntMatrix> all_sign_matrices(int m, int n);

}  // namespace pbm::oracle
