#pragma once

#include <array>
#include <optional>
#include <string>

#include "pbm/circulation.hpp"
#include "pbm/conditions.hpp"
#include "pbm/grid.hpp"
#include "pbm/instance.hpp"

namespace pbm {

struct SolveDiagnostics {
  int arcs = 0;
  long long augmentations = 0;
};

/// Either a matrix meeting every bound of the instance or a certificate
/// naming a strictly violated inequality.
struct FeasibilityResult {
  std::optional<IntMatrix> matrix;
  std::optional<Certificate> certificate;
  SolveDiagnostics diagnostics;

  bool feasible() const { return matrix.has_value(); }
};

FeasibilityResult solve(const PbmInstance& inst);

/// All four inequalities evaluated for one pair of subsets.
struct ConditionReport {
  std::array<InequalityValue, 4> values;

  bool all_hold() const;
  const InequalityValue& operator[](Inequality q) const {
    return values[static_cast<std::size_t>(q)];
  }
};

ConditionReport check_condition(const PbmInstance& inst, const SubsetMask& x1,
                                const SubsetMask& x2);

enum class OptStatus { kOptimal, kInfeasible, kUnbounded };

struct OptimumResult {
  OptStatus status = OptStatus::kInfeasible;
  long long value = 0;
  std::optional<IntMatrix> matrix;
  std::optional<Certificate> certificate;  // set when infeasible
  SolveDiagnostics diagnostics;
};

enum class Direction { kMax, kMin };

/// Optimum of the total entry sum with alpha/beta replaced by -inf/+inf.
/// Unbounded is reported when doubling the substitute for infinity moves the
/// optimum.
OptimumResult extremal_total_sum(const PbmInstance& inst, Direction direction);

/// Minimises sum cost(i,j) * A(i,j) over feasible matrices.
OptimumResult min_cost(const PbmInstance& inst, const IntMatrix& cost);

/// Values fixed on the cells of `cells`; `values` is read only there.
struct Prescription {
  SubsetMask cells;
  IntMatrix values;
};

/// Solves with f = g = values on the prescribed cells. Throws
/// kPrescriptionOutOfEntryBounds if a prescribed value lies outside [f, g].
FeasibilityResult solve_with_prescription(const PbmInstance& inst, const Prescription& pres);

/// Strict when the last-column horizontal bounds and last-row vertical bounds
/// are pinned (lower == upper) and both pinned totals agree; h is that total.
struct StrictReport {
  bool strict = false;
  ExtInt h = 0;
  std::string mismatch;
};

StrictReport check_strict(const PbmInstance& inst);

}  // namespace pbm
