#include "pbm/strong_pair.hpp"

#include <string>
#include <vector>

namespace pbm {

BoundPair elementary_pair(std::span<const ExtInt> phi, std::span<const ExtInt> gamma, int h,
                          int k) {
  const int len = static_cast<int>(phi.size());
  if (static_cast<int>(gamma.size()) != len || h < 1 || h > k || k > len) {
    throw Error(ErrorCode::kBadParams, "segment [" + std::to_string(h) + "," +
                                           std::to_string(k) + "] outside a line of length " +
                                           std::to_string(len));
  }
  const ExtInt phi_before = h == 1 ? ExtInt(0) : phi[h - 2];
  const ExtInt gamma_before = h == 1 ? ExtInt(0) : gamma[h - 2];
  return {phi[k - 1] - gamma_before, gamma[k - 1] - phi_before};
}

namespace {

std::vector<ExtInt> line_of(const ExtMatrix& x, Orientation o, int line) {
  std::vector<ExtInt> out;
  if (o == Orientation::kHorizontal) {
    for (int j = 1; j <= x.cols(); ++j) out.push_back(x(line, j));
  } else {
    for (int i = 1; i <= x.rows(); ++i) out.push_back(x(i, line));
  }
  return out;
}

BoundPair sum_over_segments(const ExtMatrix& phi, const ExtMatrix& gamma, const SubsetMask& x,
                            Orientation o) {
  BoundPair total{0, 0};
  int cached_line = 0;
  std::vector<ExtInt> phi_line, gamma_line;
  for (const Segment& s : maximal_segments(x, o)) {
    if (s.line != cached_line) {
      phi_line = line_of(phi, o, s.line);
      gamma_line = line_of(gamma, o, s.line);
      cached_line = s.line;
    }
    const BoundPair e = elementary_pair(phi_line, gamma_line, s.start, s.end);
    total.lower += e.lower;
    total.upper += e.upper;
  }
  return total;
}

}  // namespace

StrongPairEval eval_strong_pair(const PbmInstance& inst, const SubsetMask& x) {
  if (!x.same_shape(inst.m, inst.n)) {
    throw Error(ErrorCode::kDimensionMismatch, "subset mask does not match the instance");
  }
  const BoundPair h = sum_over_segments(inst.phi1, inst.gamma1, x, Orientation::kHorizontal);
  const BoundPair v = sum_over_segments(inst.phi2, inst.gamma2, x, Orientation::kVertical);
  return {h.lower, h.upper, v.lower, v.upper};
}

ExtInt p1(const PbmInstance& inst, const SubsetMask& x) { return eval_strong_pair(inst, x).p1; }
ExtInt b1(const PbmInstance& inst, const SubsetMask& x) { return eval_strong_pair(inst, x).b1; }
ExtInt p2(const PbmInstance& inst, const SubsetMask& x) { return eval_strong_pair(inst, x).p2; }
ExtInt b2(const PbmInstance& inst, const SubsetMask& x) { return eval_strong_pair(inst, x).b2; }

}  // namespace pbm
