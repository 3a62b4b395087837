#include "pbm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

namespace pbm::oracle {

namespace {

std::string at(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// Bound value of a prefix ending at position 0 of a line.
ExtInt before(const ExtMatrix& x, int i, int j, bool horizontal) {
  if (horizontal) return j == 1 ? ExtInt(0) : x(i, j - 1);
  return i == 1 ? ExtInt(0) : x(i - 1, j);
}

class Search {
 public:
  Search(const PbmInstance& inst, const EntryBox& box, const EnumerationBudget& budget, bool prune)
      : inst_(inst), box_(box), budget_(budget), prune_(prune), a_(inst.m, inst.n),
        row_(static_cast<std::size_t>(inst.m), 0), col_(static_cast<std::size_t>(inst.n), 0) {}

  std::vector<IntMatrix> run() {
    visit(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void visit(int cell) {
    if (++nodes_ > budget_.max_matrices) {
      throw Error(ErrorCode::kBudgetExceeded, "enumeration visited too many partial matrices");
    }
    if (cell == inst_.m * inst_.n) {
      if (meets_bounds(inst_, a_)) {
        found_.push_back(a_);
        if (static_cast<long long>(found_.size()) > budget_.max_matrices) {
          throw Error(ErrorCode::kBudgetExceeded, "too many matrices");
        }
      }
      return;
    }
    const int i = cell / inst_.n + 1;
    const int j = cell % inst_.n + 1;
    for (long long v = box_.lo(i, j); v <= box_.hi(i, j); ++v) {
      a_(i, j) = v;
      row_[static_cast<std::size_t>(i - 1)] += v;
      col_[static_cast<std::size_t>(j - 1)] += v;
      total_ += v;
      if (!prune_ || completable(i, j)) visit(cell + 1);
      row_[static_cast<std::size_t>(i - 1)] -= v;
      col_[static_cast<std::size_t>(j - 1)] -= v;
      total_ -= v;
    }
  }

  // Every later prefix of row i and column j must stay reachable with the
  // remaining cells at their minimum or maximum values.
  bool completable(int i, int j) const {
    long long lo = row_[static_cast<std::size_t>(i - 1)];
    long long hi = lo;
    for (int t = j; t <= inst_.n; ++t) {
      if (t > j) {
        lo += box_.lo(i, t);
        hi += box_.hi(i, t);
      }
      if (ExtInt(hi) < inst_.phi1(i, t) || ExtInt(lo) > inst_.gamma1(i, t)) return false;
    }
    lo = hi = col_[static_cast<std::size_t>(j - 1)];
    for (int t = i; t <= inst_.m; ++t) {
      if (t > i) {
        lo += box_.lo(t, j);
        hi += box_.hi(t, j);
      }
      if (ExtInt(hi) < inst_.phi2(t, j) || ExtInt(lo) > inst_.gamma2(t, j)) return false;
    }
    lo = hi = total_;
    for (int c = (i - 1) * inst_.n + j; c < inst_.m * inst_.n; ++c) {
      lo += box_.lo.flat(static_cast<std::size_t>(c));
      hi += box_.hi.flat(static_cast<std::size_t>(c));
    }
    return !(ExtInt(hi) < inst_.alpha || ExtInt(lo) > inst_.beta);
  }

  const PbmInstance& inst_;
  const EntryBox& box_;
  const EnumerationBudget& budget_;
  bool prune_;
  IntMatrix a_;
  std::vector<long long> row_;
  std::vector<long long> col_;
  long long total_ = 0;
  long long nodes_ = 0;
  std::vector<IntMatrix> found_;
};

ExtInt slack_of(ExtInt lhs, ExtInt rhs) {
  if (lhs.is_neg_inf() || rhs.is_pos_inf()) return ExtInt::pos_inf();
  return rhs - lhs;
}

// Per-subset quantities indexed by the row-major bit mask.
struct MaskTable {
  int cells;
  unsigned full;
  std::vector<LineBounds> bounds;
  std::vector<ExtInt> fsum;
  std::vector<ExtInt> gsum;
};

MaskTable tabulate(const PbmInstance& inst) {
  MaskTable t;
  t.cells = inst.m * inst.n;
  t.full = (1u << t.cells) - 1;
  const std::size_t count = std::size_t{1} << t.cells;
  t.bounds.resize(count);
  t.fsum.assign(count, 0);
  t.gsum.assign(count, 0);
  for (unsigned mask = 0; mask <= t.full; ++mask) {
    SubsetMask x(inst.m, inst.n);
    for (int c = 0; c < t.cells; ++c) {
      if ((mask >> c) & 1u) {
        x.flat(static_cast<std::size_t>(c)) = 1;
        t.fsum[mask] += inst.f.flat(static_cast<std::size_t>(c));
        t.gsum[mask] += inst.g.flat(static_cast<std::size_t>(c));
      }
    }
    t.bounds[mask] = scan_bounds(inst, x);
  }
  return t;
}

SubsetMask to_mask(const PbmInstance& inst, unsigned bits) {
  SubsetMask x(inst.m, inst.n);
  for (int c = 0; c < inst.m * inst.n; ++c) x.flat(static_cast<std::size_t>(c)) = (bits >> c) & 1u;
  return x;
}

// lhs and rhs of the four inequalities for one pair of masks.
std::array<std::pair<ExtInt, ExtInt>, 4> sides(const PbmInstance& inst, const MaskTable& t,
                                               unsigned a, unsigned b) {
  const LineBounds& x1 = t.bounds[a];
  const LineBounds& x2 = t.bounds[b];
  const unsigned outside = t.full & ~a & ~b;
  return {{
      {x1.p1 + t.fsum[b & ~a], x2.b2 + t.gsum[a & ~b]},
      {x2.p2 + t.fsum[a & ~b], x1.b1 + t.gsum[b & ~a]},
      {inst.alpha, x1.b1 + x2.b2 + t.gsum[outside] - t.fsum[a & b]},
      {x1.p1 + x2.p2 + t.fsum[outside] - t.gsum[a & b], inst.beta},
  }};
}

bool alternates(const std::vector<long long>& line, long long first, long long last) {
  long long prev = 0;
  long long head = 0;
  for (long long v : line) {
    if (v == 0) continue;
    if (v != 1 && v != -1) return false;
    if (prev == v) return false;
    if (head == 0) head = v;
    prev = v;
  }
  if (head == 0) return first == 0 && last == 0;
  return head == first && prev == last;
}

std::vector<long long> line(const IntMatrix& a, bool horizontal, int k) {
  std::vector<long long> out;
  const int len = horizontal ? a.cols() : a.rows();
  for (int p = 1; p <= len; ++p) out.push_back(horizontal ? a(k, p) : a(p, k));
  return out;
}

bool prefixes_within(const IntMatrix& a, long long lo, long long hi, bool horizontal) {
  const int lines = horizontal ? a.rows() : a.cols();
  for (int k = 1; k <= lines; ++k) {
    long long s = 0;
    for (long long v : line(a, horizontal, k)) {
      s += v;
      if (s < lo || s > hi) return false;
    }
  }
  return true;
}

bool unit_entries(const IntMatrix& a) {
  return std::all_of(a.data().begin(), a.data().end(),
                     [](long long v) { return v >= -1 && v <= 1; });
}

bool wing_ok(const std::vector<long long>& l, WingPattern w) {
  switch (w) {
    case WingPattern::kPlusPlus: return alternates(l, 1, 1);
    case WingPattern::kMinusMinus: return alternates(l, -1, -1);
    case WingPattern::kPlusMinus: return alternates(l, 1, -1) || alternates(l, 0, 0);
    case WingPattern::kMinusPlus: return alternates(l, -1, 1) || alternates(l, 0, 0);
  }
  return false;
}

}  // namespace

EntryBox entry_envelope(const PbmInstance& inst) {
  EntryBox box{IntMatrix(inst.m, inst.n), IntMatrix(inst.m, inst.n)};
  for (int i = 1; i <= inst.m; ++i) {
    for (int j = 1; j <= inst.n; ++j) {
      // entry = prefix(here) - prefix(before) in either direction
      const ExtInt lo = std::max({inst.f(i, j),
                                  inst.phi1(i, j) - before(inst.gamma1, i, j, true),
                                  inst.phi2(i, j) - before(inst.gamma2, i, j, false)});
      const ExtInt hi = std::min({inst.g(i, j),
                                  inst.gamma1(i, j) - before(inst.phi1, i, j, true),
                                  inst.gamma2(i, j) - before(inst.phi2, i, j, false)});
      if (!lo.is_finite() || !hi.is_finite()) {
        throw Error(ErrorCode::kBudgetExceeded, "entry range unbounded at " + at(i, j));
      }
      box.lo(i, j) = lo.value();
      box.hi(i, j) = hi.value();
    }
  }
  return box;
}

std::vector<IntMatrix> enumerate_pbms(const PbmInstance& inst, const EnumerationBudget& budget,
                                      bool prune) {
  if (inst.m * inst.n > budget.max_cells) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(inst.m * inst.n) + " cells exceed the budget of " +
                    std::to_string(budget.max_cells));
  }
  const EntryBox box = entry_envelope(inst);
  long double product = 1;
  for (std::size_t c = 0; c < box.lo.size(); ++c) {
    const long long width = box.hi.flat(c) - box.lo.flat(c) + 1;
    if (width <= 0) return {};
    if (width > budget.max_range_width) {
      throw Error(ErrorCode::kBudgetExceeded, "entry range of width " + std::to_string(width) +
                                                  " exceeds the budget");
    }
    product *= static_cast<long double>(width);
  }
  if (!prune && product > static_cast<long double>(budget.max_matrices)) {
    throw Error(ErrorCode::kBudgetExceeded, "unpruned search space exceeds the budget");
  }
  return Search(inst, box, budget, prune).run();
}

std::vector<IntMatrix> enumerate_one_direction(const PbmInstance& inst, bool horizontal,
                                               const EnumerationBudget& budget) {
  PbmInstance relaxed = inst;
  const ExtMatrix low(inst.m, inst.n, ExtInt::neg_inf());
  const ExtMatrix high(inst.m, inst.n, ExtInt::pos_inf());
  relaxed.f = low;
  relaxed.g = high;
  relaxed.alpha = ExtInt::neg_inf();
  relaxed.beta = ExtInt::pos_inf();
  if (horizontal) {
    relaxed.phi2 = low;
    relaxed.gamma2 = high;
  } else {
    relaxed.phi1 = low;
    relaxed.gamma1 = high;
  }
  return enumerate_pbms(relaxed, budget, true);
}

bool meets_bounds(const PbmInstance& inst, const IntMatrix& a) {
  if (!a.same_shape(inst.m, inst.n)) return false;
  long long total = 0;
  for (int i = 1; i <= inst.m; ++i) {
    long long s = 0;
    for (int j = 1; j <= inst.n; ++j) {
      const ExtInt v = a(i, j);
      if (v < inst.f(i, j) || v > inst.g(i, j)) return false;
      s += a(i, j);
      if (ExtInt(s) < inst.phi1(i, j) || ExtInt(s) > inst.gamma1(i, j)) return false;
    }
    total += s;
  }
  for (int j = 1; j <= inst.n; ++j) {
    long long s = 0;
    for (int i = 1; i <= inst.m; ++i) {
      s += a(i, j);
      if (ExtInt(s) < inst.phi2(i, j) || ExtInt(s) > inst.gamma2(i, j)) return false;
    }
  }
  return ExtInt(total) >= inst.alpha && ExtInt(total) <= inst.beta;
}

LineBounds scan_bounds(const PbmInstance& inst, const SubsetMask& x) {
  LineBounds out;
  for (int i = 1; i <= inst.m; ++i) {
    for (int j = 1; j <= inst.n; ++j) {
      if (!x(i, j) || (j > 1 && x(i, j - 1))) continue;
      int k = j;
      while (k < inst.n && x(i, k + 1)) ++k;
      out.p1 += inst.phi1(i, k) - before(inst.gamma1, i, j, true);
      out.b1 += inst.gamma1(i, k) - before(inst.phi1, i, j, true);
    }
  }
  for (int j = 1; j <= inst.n; ++j) {
    for (int i = 1; i <= inst.m; ++i) {
      if (!x(i, j) || (i > 1 && x(i - 1, j))) continue;
      int k = i;
      while (k < inst.m && x(k + 1, j)) ++k;
      out.p2 += inst.phi2(k, j) - before(inst.gamma2, i, j, false);
      out.b2 += inst.gamma2(k, j) - before(inst.phi2, i, j, false);
    }
  }
  return out;
}

bool ConditionScan::all_hold() const {
  return std::none_of(worst.begin(), worst.end(), [](const WorstPair& w) { return w.violated(); });
}

ConditionScan brute_force_condition(const PbmInstance& inst, long long samples,
                                    std::uint64_t seed) {
  const int cells = inst.m * inst.n;
  if (cells > 12) {
    throw Error(ErrorCode::kBudgetExceeded, "condition scan is limited to 12 cells");
  }
  const MaskTable t = tabulate(inst);
  ConditionScan scan;
  for (WorstPair& w : scan.worst) {
    w.x1 = SubsetMask(inst.m, inst.n);
    w.x2 = SubsetMask(inst.m, inst.n);
  }
  std::array<bool, 4> seen{};
  auto consider = [&](unsigned a, unsigned b) {
    const auto s = sides(inst, t, a, b);
    for (std::size_t q = 0; q < 4; ++q) {
      const ExtInt slack = slack_of(s[q].first, s[q].second);
      WorstPair& w = scan.worst[q];
      if (!seen[q] || slack < w.slack) {
        seen[q] = true;
        w.slack = slack;
        w.lhs = s[q].first;
        w.rhs = s[q].second;
        w.x1 = to_mask(inst, a);
        w.x2 = to_mask(inst, b);
      }
    }
  };
  if (cells <= 8) {
    for (unsigned a = 0; a <= t.full; ++a) {
      for (unsigned b = 0; b <= t.full; ++b) consider(a, b);
    }
  } else {
    scan.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick(0, t.full);
    consider(0, 0);
    for (long long s = 0; s < samples; ++s) consider(pick(rng), pick(rng));
  }
  return scan;
}

TotalSumBounds total_sum_formula(const PbmInstance& inst) {
  if (inst.m * inst.n > 8) {
    throw Error(ErrorCode::kBudgetExceeded, "total-sum formula is limited to 8 cells");
  }
  const MaskTable t = tabulate(inst);
  TotalSumBounds out{ExtInt::pos_inf(), ExtInt::neg_inf()};
  for (unsigned a = 0; a <= t.full; ++a) {
    for (unsigned b = 0; b <= t.full; ++b) {
      const auto s = sides(inst, t, a, b);
      out.max = std::min(out.max, s[2].second);
      out.min = std::max(out.min, s[3].first);
    }
  }
  return out;
}

std::vector<IntMatrix> enumerate_subordinates(const IntMatrix& x, int max_nonzeros) {
  std::vector<std::size_t> nonzero;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x.flat(c) != 0) nonzero.push_back(c);
  }
  if (static_cast<int>(nonzero.size()) > max_nonzeros) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(nonzero.size()) + " nonzero entries exceed the budget");
  }
  std::vector<IntMatrix> out;
  const unsigned long long patterns = 1ULL << nonzero.size();
  for (unsigned long long keep = 0; keep < patterns; ++keep) {
    IntMatrix a(x.rows(), x.cols());
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
      if ((keep >> k) & 1ULL) a.flat(nonzero[k]) = x.flat(nonzero[k]);
    }
    if (is_asm(a)) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_asm(const IntMatrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1) return false;
  for (int k = 1; k <= a.rows(); ++k) {
    if (!alternates(line(a, true, k), 1, 1) || !alternates(line(a, false, k), 1, 1)) return false;
  }
  return true;
}

bool is_pasm(const IntMatrix& a) {
  return unit_entries(a) && prefixes_within(a, 0, 1, true) && prefixes_within(a, 0, 1, false);
}

bool is_k_regular_asm(const IntMatrix& a, int k) {
  if (a.rows() != a.cols() || a.rows() < 1 || !unit_entries(a)) return false;
  if (!prefixes_within(a, 0, k, true) || !prefixes_within(a, 0, k, false)) return false;
  for (int t = 1; t <= a.rows(); ++t) {
    long long r = 0, c = 0;
    for (int p = 1; p <= a.rows(); ++p) {
      r += a(t, p);
      c += a(p, t);
    }
    if (r != k || c != k) return false;
  }
  return true;
}

bool is_aval_sign(const IntMatrix& a) {
  return unit_entries(a) && prefixes_within(a, 0, 1, false) &&
         prefixes_within(a, 0, std::numeric_limits<long long>::max(), true);
}

bool is_wasm(const IntMatrix& a, const std::vector<WingPattern>& rows,
             const std::vector<WingPattern>& cols) {
  if (static_cast<int>(rows.size()) != a.rows() || static_cast<int>(cols.size()) != a.cols()) {
    return false;
  }
  for (int i = 1; i <= a.rows(); ++i) {
    if (!wing_ok(line(a, true, i), rows[static_cast<std::size_t>(i - 1)])) return false;
  }
  for (int j = 1; j <= a.cols(); ++j) {
    if (!wing_ok(line(a, false, j), cols[static_cast<std::size_t>(j - 1)])) return false;
  }
  return true;
}

std::vector<IntMatrix> all_sign_matrices(int m, int n) {
  const int cells = m * n;
  long long total = 1;
  for (int c = 0; c < cells; ++c) total *= 3;
  std::vector<IntMatrix> out;
  out.reserve(static_cast<std::size_t>(total));
  for (long long code = 0; code < total; ++code) {
    IntMatrix a(m, n);
    long long rest = code;
    for (int c = 0; c < cells; ++c) {
      a.flat(static_cast<std::size_t>(c)) = rest % 3 - 1;
      rest /= 3;
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pbm::oracle
