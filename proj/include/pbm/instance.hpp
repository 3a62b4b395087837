#pragma once

#include "pbm/ext_int.hpp"
#include "pbm/grid.hpp"

namespace pbm {

/// A prefix-bounded matrix problem.
///
/// phi1/gamma1 bound the horizontal prefix sums: the sum of the first j
/// entries of row i lies in [phi1(i,j), gamma1(i,j)]. phi2/gamma2 bound the
/// vertical prefix sums the same way (first i entries of column j). f/g bound
/// individual entries and alpha/beta bound the total sum.
///
/// Lower bounds (phi*, f, alpha) may be -inf but never +inf; upper bounds
/// (gamma*, g, beta) may be +inf but never -inf.
struct PbmInstance {
  int m = 0;
  int n = 0;
  ExtMatrix phi1, gamma1, phi2, gamma2;
  ExtMatrix f, g;
  ExtInt alpha = ExtInt::neg_inf();
  ExtInt beta = ExtInt::pos_inf();

  friend bool operator==(const PbmInstance&, const PbmInstance&) = default;
};

// Instance with the given prefix bounds and unbounded entries/total.
PbmInstance make_pbm(ExtMatrix phi1, ExtMatrix gamma1, ExtMatrix phi2, ExtMatrix gamma2);

/// Returns `raw` unchanged if every instance invariant holds.
///
/// Throws kDimensionMismatch, kIllegalInfinity or kBoundOrderViolation; the
/// message names the matrix and the first offending 1-based position.
PbmInstance validate_instance(const PbmInstance& raw);

// True when every prefix, entry and total-sum bound holds for `a`.
bool satisfies(const PbmInstance& inst, const IntMatrix& a);

}  // namespace pbm
