#include "pbm/grid.hpp"

#include <sstream>

namespace pbm {

namespace {

void require_same_shape(const SubsetMask& a, const SubsetMask& b) {
  if (!a.same_shape(b)) {
    throw Error(ErrorCode::kDimensionMismatch, "subset masks differ in shape");
  }
}

template <typename Op>
SubsetMask zip(const SubsetMask& a, const SubsetMask& b, Op op) {
  require_same_shape(a, b);
  SubsetMask out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.flat(k) = op(a.flat(k) != 0, b.flat(k) != 0) ? 1 : 0;
  return out;
}

}  // namespace

SubsetMask mask_from_cells(int rows, int cols, const std::vector<Cell>& cells) {
  SubsetMask x(rows, cols);
  for (const Cell& c : cells) {
    if (c.row < 1 || c.row > rows || c.col < 1 || c.col > cols) {
      throw Error(ErrorCode::kDimensionMismatch, "cell outside the grid");
    }
    x(c.row, c.col) = 1;
  }
  return x;
}

std::vector<Cell> cells_of(const SubsetMask& mask) {
  std::vector<Cell> out;
  for (int i = 1; i <= mask.rows(); ++i) {
    for (int j = 1; j <= mask.cols(); ++j) {
      if (mask(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

SubsetMask full_mask(int rows, int cols) { return SubsetMask(rows, cols, 1); }

SubsetMask complement(const SubsetMask& x) {
  SubsetMask out(x.rows(), x.cols());
  for (std::size_t k = 0; k < x.size(); ++k) out.flat(k) = x.flat(k) ? 0 : 1;
  return out;
}

SubsetMask intersect(const SubsetMask& a, const SubsetMask& b) {
  return zip(a, b, [](bool p, bool q) { return p && q; });
}
SubsetMask unite(const SubsetMask& a, const SubsetMask& b) {
  return zip(a, b, [](bool p, bool q) { return p || q; });
}
SubsetMask minus(const SubsetMask& a, const SubsetMask& b) {
  return zip(a, b, [](bool p, bool q) { return p && !q; });
}
SubsetMask sym_diff(const SubsetMask& a, const SubsetMask& b) {
  return zip(a, b, [](bool p, bool q) { return p != q; });
}

int count(const SubsetMask& x) {
  int c = 0;
  for (std::size_t k = 0; k < x.size(); ++k) c += x.flat(k) ? 1 : 0;
  return c;
}

bool is_subset(const SubsetMask& a, const SubsetMask& b) {
  require_same_shape(a, b);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.flat(k) && !b.flat(k)) return false;
  }
  return true;
}

SubsetMask mask_from_bits(int rows, int cols, unsigned long long bits) {
  SubsetMask x(rows, cols);
  for (std::size_t k = 0; k < x.size(); ++k) x.flat(k) = (bits >> k) & 1ULL ? 1 : 0;
  return x;
}

ExtInt masked_sum(const ExtMatrix& values, const SubsetMask& x) {
  if (!values.same_shape(x)) {
    throw Error(ErrorCode::kDimensionMismatch, "mask and matrix differ in shape");
  }
  ExtInt s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x.flat(k)) s += values.flat(k);
  }
  return s;
}

long long masked_sum(const IntMatrix& values, const SubsetMask& x) {
  if (!values.same_shape(x)) {
    throw Error(ErrorCode::kDimensionMismatch, "mask and matrix differ in shape");
  }
  long long s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x.flat(k)) s = checked_add(s, values.flat(k));
  }
  return s;
}

ExtMatrix to_ext(const IntMatrix& m) {
  ExtMatrix out(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.size(); ++k) out.flat(k) = ExtInt(m.flat(k));
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= m.rows(); ++i) {
    os << (i > 1 ? "," : "") << '[';
    for (int j = 1; j <= m.cols(); ++j) os << (j > 1 ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace pbm
