#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pbm/error.hpp"
#include "pbm/ext_int.hpp"

namespace pbm {

/// Dense m x n array addressed with 1-based (row, col), row-major storage.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) {
      throw Error(ErrorCode::kDimensionMismatch, "negative grid dimension");
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool same_shape(int rows, int cols) const { return rows_ == rows && cols_ == cols; }
  template <typename U>
  bool same_shape(const Grid<U>& other) const {
    return rows_ == other.rows() && cols_ == other.cols();
  }

  decltype(auto) operator()(int i, int j) { return data_[index(i, j)]; }
  decltype(auto) operator()(int i, int j) const { return data_[index(i, j)]; }

  // Flat access in row-major order, 0-based.
  decltype(auto) flat(std::size_t k) { return data_[k]; }
  decltype(auto) flat(std::size_t k) const { return data_[k]; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Grid& a, const Grid& b) {
    return std::tie(a.rows_, a.cols_, a.data_) < std::tie(b.rows_, b.cols_, b.data_);
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Grid<long long>;
using ExtMatrix = Grid<ExtInt>;
// char instead of bool keeps element references addressable.
using SubsetMask = Grid<char>;

struct Cell {
  int row;
  int col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

SubsetMask mask_from_cells(int rows, int cols, const std::vector<Cell>& cells);
std::vector<Cell> cells_of(const SubsetMask& mask);

SubsetMask full_mask(int rows, int cols);
SubsetMask complement(const SubsetMask& x);
SubsetMask intersect(const SubsetMask& a, const SubsetMask& b);
SubsetMask unite(const SubsetMask& a, const SubsetMask& b);
SubsetMask minus(const SubsetMask& a, const SubsetMask& b);
SubsetMask sym_diff(const SubsetMask& a, const SubsetMask& b);
int count(const SubsetMask& x);
bool is_subset(const SubsetMask& a, const SubsetMask& b);

// Bit k of `bits` (row-major, 0-based) selects cell k.
SubsetMask mask_from_bits(int rows, int cols, unsigned long long bits);

// Sum of `values` over the cells of `x`, with ExtInt semantics.
ExtInt masked_sum(const ExtMatrix& values, const SubsetMask& x);
long long masked_sum(const IntMatrix& values, const SubsetMask& x);

ExtMatrix to_ext(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace pbm
