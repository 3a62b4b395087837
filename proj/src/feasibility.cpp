#include "pbm/feasibility.hpp"

#include <variant>
#include <vector>

namespace pbm {

namespace {

std::string pos(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

FeasibilityResult solve_on(const PbmInstance& inst, const Network& net) {
  FeasibilityResult out;
  SolveStats stats;
  CirculationResult r = find_feasible_circulation(net, &stats);
  out.diagnostics = {net.arc_count(), stats.augmentations};
  if (const auto* z = std::get_if<Circulation>(&r)) {
    IntMatrix a = matrix_from_circulation(net, *z);
    if (!satisfies(inst, a)) {
      throw Error(ErrorCode::kInternal, "solver matrix violates the instance bounds");
    }
    out.matrix = std::move(a);
  } else {
    out.certificate = cut_to_certificate(inst, net, std::get<CutWitness>(r));
  }
  return out;
}

struct CostRun {
  std::optional<Circulation> z;
  long long cost = 0;
  long long augmentations = 0;
};

CostRun run_min_cost(const Network& net, const std::vector<long long>& cost) {
  SolveStats stats;
  CirculationResult r = min_cost_circulation(net, cost, &stats);
  CostRun out;
  out.augmentations = stats.augmentations;
  if (auto* z = std::get_if<Circulation>(&r)) {
    out.cost = circulation_cost(*z, cost);
    out.z = std::move(*z);
  }
  return out;
}

// Arc ids do not depend on K, so one cost vector serves both networks.
OptimumResult optimize(const PbmInstance& inst, const std::vector<long long>& cost) {
  OptimumResult out;
  const Network net = Network::build(inst);
  CostRun first = run_min_cost(net, cost);
  out.diagnostics = {net.arc_count(), first.augmentations};
  if (!first.z) {
    FeasibilityResult f = solve_on(inst, net);
    out.status = OptStatus::kInfeasible;
    out.certificate = std::move(f.certificate);
    return out;
  }
  const long long k = net.big_k();
  const Network wider = Network::build(inst, checked_add(checked_mul(k, 2), 1));
  CostRun second = run_min_cost(wider, cost);
  out.diagnostics.augmentations += second.augmentations;
  if (!second.z || second.cost != first.cost) {
    out.status = OptStatus::kUnbounded;
    return out;
  }
  out.status = OptStatus::kOptimal;
  out.value = first.cost;
  IntMatrix a = matrix_from_circulation(net, *first.z);
  if (!satisfies(inst, a)) {
    throw Error(ErrorCode::kInternal, "optimal matrix violates the instance bounds");
  }
  out.matrix = std::move(a);
  return out;
}

}  // namespace

FeasibilityResult solve(const PbmInstance& inst) { return solve_on(inst, Network::build(inst)); }

bool ConditionReport::all_hold() const {
  for (const InequalityValue& v : values) {
    if (!v.holds()) return false;
  }
  return true;
}

ConditionReport check_condition(const PbmInstance& inst, const SubsetMask& x1,
                                const SubsetMask& x2) {
  ConditionReport r;
  for (Inequality q : kAllInequalities) {
    r.values[static_cast<std::size_t>(q)] = evaluate(inst, x1, x2, q);
  }
  return r;
}

OptimumResult extremal_total_sum(const PbmInstance& inst, Direction direction) {
  PbmInstance open = inst;
  open.alpha = ExtInt::neg_inf();
  open.beta = ExtInt::pos_inf();
  const int arcs = 3 * inst.m * inst.n + 1;
  std::vector<long long> cost(static_cast<std::size_t>(arcs), 0);
  cost.back() = direction == Direction::kMax ? -1 : 1;
  OptimumResult r = optimize(open, cost);
  if (r.status == OptStatus::kOptimal && direction == Direction::kMax) r.value = -r.value;
  return r;
}

OptimumResult min_cost(const PbmInstance& inst, const IntMatrix& cost) {
  if (!cost.same_shape(inst.m, inst.n)) {
    throw Error(ErrorCode::kDimensionMismatch, "cost matrix does not match the instance");
  }
  const int mn = inst.m * inst.n;
  std::vector<long long> arc_cost(static_cast<std::size_t>(3 * mn + 1), 0);
  for (int k = 0; k < mn; ++k) {
    arc_cost[static_cast<std::size_t>(2 * mn + k)] = cost.flat(static_cast<std::size_t>(k));
  }
  return optimize(inst, arc_cost);
}

FeasibilityResult solve_with_prescription(const PbmInstance& inst, const Prescription& pres) {
  if (!pres.cells.same_shape(inst.m, inst.n) || !pres.values.same_shape(inst.m, inst.n)) {
    throw Error(ErrorCode::kDimensionMismatch, "prescription does not match the instance");
  }
  PbmInstance fixed = inst;
  for (int i = 1; i <= inst.m; ++i) {
    for (int j = 1; j <= inst.n; ++j) {
      if (!pres.cells(i, j)) continue;
      const ExtInt v = pres.values(i, j);
      if (v < inst.f(i, j) || v > inst.g(i, j)) {
        throw Error(ErrorCode::kPrescriptionOutOfEntryBounds,
                    "prescribed value " + v.to_string() + " outside the entry bounds at " +
                        pos(i, j));
      }
      fixed.f(i, j) = v;
      fixed.g(i, j) = v;
    }
  }
  return solve(fixed);
}

StrictReport check_strict(const PbmInstance& inst) {
  StrictReport r;
  ExtInt rows = 0;
  for (int i = 1; i <= inst.m; ++i) {
    const ExtInt lo = inst.phi1(i, inst.n);
    if (lo != inst.gamma1(i, inst.n) || !lo.is_finite()) {
      r.mismatch = "horizontal bounds differ at " + pos(i, inst.n);
      return r;
    }
    rows += lo;
  }
  ExtInt cols = 0;
  for (int j = 1; j <= inst.n; ++j) {
    const ExtInt lo = inst.phi2(inst.m, j);
    if (lo != inst.gamma2(inst.m, j) || !lo.is_finite()) {
      r.mismatch = "vertical bounds differ at " + pos(inst.m, j);
      return r;
    }
    cols += lo;
  }
  if (rows != cols) {
    r.mismatch = "row total " + rows.to_string() + " differs from column total " +
                 cols.to_string();
    return r;
  }
  r.strict = true;
  r.h = rows;
  return r;
}

}  // namespace pbm
