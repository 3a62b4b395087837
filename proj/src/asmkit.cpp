#include "pbm/asmkit.hpp"

namespace pbm {

namespace {

const ExtInt kNegInf = ExtInt::neg_inf();
const ExtInt kPosInf = ExtInt::pos_inf();

void require_positive(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::kBadParams, "dimensions must be positive");
}

// Lower bound `last` in the final position of each line, `rest` elsewhere.
ExtMatrix row_pinned(int m, int n, const std::vector<long long>& last, ExtInt rest) {
  ExtMatrix x(m, n, rest);
  for (int i = 1; i <= m; ++i) x(i, n) = last[static_cast<std::size_t>(i - 1)];
  return x;
}

ExtMatrix col_pinned(int m, int n, const std::vector<long long>& last, ExtInt rest) {
  ExtMatrix x(m, n, rest);
  for (int j = 1; j <= n; ++j) x(m, j) = last[static_cast<std::size_t>(j - 1)];
  return x;
}

PbmInstance regular_shape(int n, long long r, bool unit_entries) {
  require_positive(n, n);
  if (r < 0) throw Error(ErrorCode::kBadParams, "line sum must be non-negative");
  const std::vector<long long> sums(static_cast<std::size_t>(n), r);
  PbmInstance inst = make_pbm(row_pinned(n, n, sums, 0), ExtMatrix(n, n, r),
                              col_pinned(n, n, sums, 0), ExtMatrix(n, n, r));
  if (unit_entries) {
    inst.f = ExtMatrix(n, n, -1);
    inst.g = ExtMatrix(n, n, 1);
  }
  return validate_instance(inst);
}

}  // namespace

PbmInstance make_asm(int n) { return regular_shape(n, 1, true); }

PbmInstance make_k_regular(int n, int k) {
  if (k < 1) throw Error(ErrorCode::kBadParams, "k must be positive");
  return regular_shape(n, k, true);
}

PbmInstance make_higher_spin(int n, int r) {
  if (r < 1) throw Error(ErrorCode::kBadParams, "r must be positive");
  return regular_shape(n, r, false);
}

PbmInstance make_pasm(int m, int n) {
  require_positive(m, n);
  PbmInstance inst = make_pbm(ExtMatrix(m, n, 0), ExtMatrix(m, n, 1), ExtMatrix(m, n, 0),
                              ExtMatrix(m, n, 1));
  inst.f = ExtMatrix(m, n, -1);
  inst.g = ExtMatrix(m, n, 1);
  return validate_instance(inst);
}

PbmInstance make_aval_sign(int m, int n) {
  require_positive(m, n);
  PbmInstance inst = make_pbm(ExtMatrix(m, n, 0), ExtMatrix(m, n, kPosInf), ExtMatrix(m, n, 0),
                              ExtMatrix(m, n, 1));
  inst.f = ExtMatrix(m, n, -1);
  inst.g = ExtMatrix(m, n, 1);
  return validate_instance(inst);
}

PbmInstance make_brualdi_dahl(const std::vector<long long>& r, const std::vector<long long>& s) {
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(s.size());
  require_positive(m, n);
  for (long long v : r) {
    if (v < 0) throw Error(ErrorCode::kBadParams, "row sums must be non-negative");
  }
  for (long long v : s) {
    if (v < 0) throw Error(ErrorCode::kBadParams, "column sums must be non-negative");
  }
  ExtMatrix gamma1(m, n), gamma2(m, n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      gamma1(i, j) = r[static_cast<std::size_t>(i - 1)];
      gamma2(i, j) = s[static_cast<std::size_t>(j - 1)];
    }
  }
  PbmInstance inst =
      make_pbm(row_pinned(m, n, r, 0), gamma1, col_pinned(m, n, s, 0), gamma2);
  inst.f = ExtMatrix(m, n, -1);
  inst.g = ExtMatrix(m, n, 1);
  return validate_instance(inst);
}

PbmInstance make_sum_majorized(const IntMatrix& b) {
  const int n = b.rows();
  if (n < 1 || b.cols() != n) throw Error(ErrorCode::kBadParams, "B must be square");
  std::vector<long long> rows, cols;
  for (int k = 1; k <= n; ++k) {
    rows.push_back(b(k, n));
    cols.push_back(b(n, k));
  }
  ExtMatrix upper = to_ext(b);
  for (std::size_t c = 0; c < b.size(); ++c) {
    if (b.flat(c) < 0) throw Error(ErrorCode::kBadParams, "B must be non-negative");
  }
  return validate_instance(
      make_pbm(row_pinned(n, n, rows, 0), upper, col_pinned(n, n, cols, 0), upper));
}

PartClass part_class_from_code(const std::string& code) {
  if (code == "0") return PartClass::kZero;
  if (code == "+1") return PartClass::kPlusOne;
  if (code == "-1") return PartClass::kMinusOne;
  if (code == "+") return PartClass::kPlus;
  if (code == "-") return PartClass::kMinus;
  if (code == "F") return PartClass::kFree;
  throw Error(ErrorCode::kParse, "unknown partition code \"" + code + "\"");
}

std::string part_class_code(PartClass c) {
  switch (c) {
    case PartClass::kZero: return "0";
    case PartClass::kPlusOne: return "+1";
    case PartClass::kMinusOne: return "-1";
    case PartClass::kPlus: return "+";
    case PartClass::kMinus: return "-";
    case PartClass::kFree: return "F";
  }
  return "?";
}

SubsetMask part_mask(const SPartition& part, PartClass c) {
  SubsetMask out(part.rows(), part.cols());
  for (std::size_t k = 0; k < part.size(); ++k) out.flat(k) = part.flat(k) == c ? 1 : 0;
  return out;
}

ExtInt compat_lower(PartClass c) {
  switch (c) {
    case PartClass::kZero:
    case PartClass::kPlus: return 0;
    case PartClass::kPlusOne: return 1;
    default: return kNegInf;
  }
}

ExtInt compat_upper(PartClass c) {
  switch (c) {
    case PartClass::kZero:
    case PartClass::kMinus: return 0;
    case PartClass::kMinusOne: return -1;
    default: return kPosInf;
  }
}

PbmInstance compatible_instance(const SPartition& part) {
  const int n = part.rows();
  if (n < 1 || part.cols() != n) throw Error(ErrorCode::kBadParams, "partition must be square");
  PbmInstance inst = make_asm(n);
  for (std::size_t k = 0; k < part.size(); ++k) {
    inst.f.flat(k) = compat_lower(part.flat(k));
    inst.g.flat(k) = compat_upper(part.flat(k));
  }
  return validate_instance(inst);
}

SegmentFamily make_family(const SPartition& part, const SubsetMask& horizontal,
                          const SubsetMask& vertical) {
  SegmentFamily fam;
  fam.n = part.rows();
  fam.horizontal = maximal_segments(horizontal, Orientation::kHorizontal);
  fam.vertical = maximal_segments(vertical, Orientation::kVertical);
  fam.size = static_cast<int>(fam.horizontal.size() + fam.vertical.size());
  fam.s_feasible = true;
  for (std::size_t k = 0; k < part.size(); ++k) {
    const bool h = horizontal.flat(k) != 0;
    const bool v = vertical.flat(k) != 0;
    const PartClass c = part.flat(k);
    if (!h && !v) {
      if (c == PartClass::kMinusOne) ++fam.minus_one_uncovered;
      if (c == PartClass::kPlusOne || c == PartClass::kPlus || c == PartClass::kFree) {
        fam.s_feasible = false;
      }
    }
    if (h && v) {
      if (c == PartClass::kPlusOne) ++fam.plus_one_doubled;
      if (c == PartClass::kMinusOne || c == PartClass::kMinus || c == PartClass::kFree) {
        fam.s_feasible = false;
      }
    }
  }
  return fam;
}

AsmResult compatible_asm(const SPartition& part) {
  AsmResult out{solve(compatible_instance(part)), std::nullopt};
  if (out.result.feasible()) return out;
  const Certificate& cert = *out.result.certificate;
  // With pinned line sums every inequality reads
  // n <= b1(H) + b2(V) + g(outside H and V) - f(inside both);
  // the case decides which of X1, X2 enter complemented.
  SubsetMask h = cert.x1;
  SubsetMask v = cert.x2;
  if (cert.case_id == 1 || cert.case_id == 4) h = complement(h);
  if (cert.case_id == 2 || cert.case_id == 4) v = complement(v);
  SegmentFamily fam = make_family(part, h, v);
  if (!fam.s_feasible || !fam.violates()) {
    throw Error(ErrorCode::kInternal, "segment family does not certify infeasibility");
  }
  out.family = std::move(fam);
  return out;
}

SPartition subordinate_partition(const IntMatrix& x) {
  const int n = x.rows();
  if (n < 1 || x.cols() != n) throw Error(ErrorCode::kBadEntries, "matrix must be square");
  SPartition part(n, n, PartClass::kZero);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const long long v = x.flat(k);
    if (v < -1 || v > 1) {
      throw Error(ErrorCode::kBadEntries, "entry " + std::to_string(v) + " is not in {-1,0,1}");
    }
    part.flat(k) = v == 1 ? PartClass::kPlus : v == -1 ? PartClass::kMinus : PartClass::kZero;
  }
  return part;
}

AsmResult subordinate_asm(const IntMatrix& x) {
  AsmResult out = compatible_asm(subordinate_partition(x));
  if (out.result.matrix) {
    const IntMatrix& a = *out.result.matrix;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a.flat(k) != 0 && a.flat(k) != x.flat(k)) {
        throw Error(ErrorCode::kInternal, "result is not a subordinate of the input");
      }
    }
  }
  return out;
}

std::optional<MaxPlusOnes> max_plus_ones_subordinate(const IntMatrix& x) {
  const PbmInstance inst = compatible_instance(subordinate_partition(x));
  IntMatrix cost(x.rows(), x.cols());
  for (std::size_t k = 0; k < x.size(); ++k) cost.flat(k) = x.flat(k) == 1 ? -1 : 0;
  OptimumResult r = min_cost(inst, cost);
  if (r.status != OptStatus::kOptimal) return std::nullopt;
  MaxPlusOnes out{*r.matrix, 0};
  for (std::size_t k = 0; k < out.matrix.size(); ++k) out.count += out.matrix.flat(k) == 1;
  return out;
}

WingPattern wing_from_string(const std::string& s) {
  if (s == "++") return WingPattern::kPlusPlus;
  if (s == "--") return WingPattern::kMinusMinus;
  if (s == "+-") return WingPattern::kPlusMinus;
  if (s == "-+") return WingPattern::kMinusPlus;
  throw Error(ErrorCode::kParse, "unknown wing pattern \"" + s + "\"");
}

std::string wing_to_string(WingPattern w) {
  switch (w) {
    case WingPattern::kPlusPlus: return "++";
    case WingPattern::kMinusMinus: return "--";
    case WingPattern::kPlusMinus: return "+-";
    case WingPattern::kMinusPlus: return "-+";
  }
  return "?";
}

ExtInt wing_lower(WingPattern w, int l, int k) {
  const bool first_plus = w == WingPattern::kPlusPlus || w == WingPattern::kPlusMinus;
  if (l < k) return first_plus ? 0 : -1;
  switch (w) {
    case WingPattern::kPlusPlus: return 1;
    case WingPattern::kMinusMinus: return -1;
    default: return 0;
  }
}

ExtInt wing_upper(WingPattern w, int l, int k) {
  const bool first_plus = w == WingPattern::kPlusPlus || w == WingPattern::kPlusMinus;
  if (l < k) return first_plus ? 1 : 0;
  return wing_lower(w, l, k);
}

PbmInstance wasm_instance(const std::vector<WingPattern>& rows,
                          const std::vector<WingPattern>& cols) {
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(cols.size());
  require_positive(m, n);
  ExtMatrix phi1(m, n), gamma1(m, n), phi2(m, n), gamma2(m, n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const WingPattern r = rows[static_cast<std::size_t>(i - 1)];
      const WingPattern c = cols[static_cast<std::size_t>(j - 1)];
      phi1(i, j) = wing_lower(r, j, n);
      gamma1(i, j) = wing_upper(r, j, n);
      phi2(i, j) = wing_lower(c, i, m);
      gamma2(i, j) = wing_upper(c, i, m);
    }
  }
  PbmInstance inst = make_pbm(phi1, gamma1, phi2, gamma2);
  inst.f = ExtMatrix(m, n, -1);
  inst.g = ExtMatrix(m, n, 1);
  return validate_instance(inst);
}

}  // namespace pbm
