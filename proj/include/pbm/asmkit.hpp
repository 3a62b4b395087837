#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbm/feasibility.hpp"
#include "pbm/grid.hpp"
#include "pbm/instance.hpp"
#include "pbm/segments.hpp"

namespace pbm {

// Prefix bounds in [0, 1], line sums 1, entries in [-1, 1].
PbmInstance make_asm(int n);
// Prefix bounds in [0, k], line sums k, entries in [-1, 1].
PbmInstance make_k_regular(int n, int k);
// Prefix bounds in [0, r], line sums r, entries unbounded.
PbmInstance make_higher_spin(int n, int r);
// Prefix bounds in [0, 1], entries in [-1, 1].
PbmInstance make_pasm(int m, int n);
// Vertical prefixes in [0, 1], horizontal prefixes >= 0, entries in [-1, 1].
PbmInstance make_aval_sign(int m, int n);
// Row i prefixes in [0, r_i] with sum r_i; column j likewise with s_j.
PbmInstance make_brualdi_dahl(const std::vector<long long>& r, const std::vector<long long>& s);
// Prefixes in [0, b_ij]; row i sums to b_in and column j to b_nj.
PbmInstance make_sum_majorized(const IntMatrix& b);

/// Position classes of an S-compatible ASM: fixed 0, fixed +1, fixed -1,
/// non-negative, non-positive, free.
enum class PartClass { kZero, kPlusOne, kMinusOne, kPlus, kMinus, kFree };

// "0", "+1", "-1", "+", "-", "F"; throws kParse otherwise.
PartClass part_class_from_code(const std::string& code);
std::string part_class_code(PartClass c);

using SPartition = Grid<PartClass>;

SubsetMask part_mask(const SPartition& part, PartClass c);

/// Entry bounds of the S-compatibility encoding.
ExtInt compat_lower(PartClass c);
ExtInt compat_upper(PartClass c);

/// ASM prefix bounds with the S-compatibility entry bounds.
PbmInstance compatible_instance(const SPartition& part);

/// A separated family of horizontal and vertical segments. A one-cell
/// segment may appear in both lists and then counts twice.
struct SegmentFamily {
  std::vector<Segment> horizontal;
  std::vector<Segment> vertical;
  int n = 0;
  int size = 0;                 // |I|
  int minus_one_uncovered = 0;  // fixed -1 cells covered by no segment
  int plus_one_doubled = 0;     // fixed +1 cells covered twice
  bool s_feasible = false;

  // True when |I| < n + minus_one_uncovered + plus_one_doubled.
  bool violates() const { return size < n + minus_one_uncovered + plus_one_doubled; }
};

/// Builds the family from a horizontal set and a vertical set and counts it
/// against the partition.
SegmentFamily make_family(const SPartition& part, const SubsetMask& horizontal,
                          const SubsetMask& vertical);

struct AsmResult {
  FeasibilityResult result;
  std::optional<SegmentFamily> family;  // set when infeasible
};

/// An S-compatible ASM, or a family of segments violating the counting
/// condition. Throws kInternal if the translated family does not violate it.
AsmResult compatible_asm(const SPartition& part);

/// The partition induced by a (0, +-1) matrix: zeros fixed, +1 cells
/// non-negative, -1 cells non-positive. Throws kBadEntries.
SPartition subordinate_partition(const IntMatrix& x);

/// An ASM obtained from `x` by zeroing entries, or a separated segment
/// family with fewer than n segments covering the +1 entries.
AsmResult subordinate_asm(const IntMatrix& x);

struct MaxPlusOnes {
  IntMatrix matrix;
  int count = 0;
};

/// A subordinate ASM with the most +1 entries, or nullopt when none exists.
std::optional<MaxPlusOnes> max_plus_ones_subordinate(const IntMatrix& x);

enum class WingPattern { kPlusPlus, kMinusMinus, kPlusMinus, kMinusPlus };

// "++", "--", "+-", "-+"; throws kParse otherwise.
WingPattern wing_from_string(const std::string& s);
std::string wing_to_string(WingPattern w);

/// Lower and upper prefix bound at position l of a line of length k.
ExtInt wing_lower(WingPattern w, int l, int k);
ExtInt wing_upper(WingPattern w, int l, int k);

/// Horizontal bounds from the row patterns (k = n), vertical bounds from the
/// column patterns (k = m), entries in [-1, 1].
PbmInstance wasm_instance(const std::vector<WingPattern>& rows,
                          const std::vector<WingPattern>& cols);

}  // namespace pbm
