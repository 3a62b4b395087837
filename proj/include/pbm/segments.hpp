#pragma once

#include <vector>

#include "pbm/grid.hpp"

namespace pbm {

enum class Orientation { kHorizontal, kVertical };

/// A run of consecutive cells along one row (horizontal) or column
/// (vertical). `start`/`end` are inclusive positions along the line.
struct Segment {
  Orientation orientation;
  int line;
  int start;
  int end;

  int length() const { return end - start + 1; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Maximal segments of `x` along the given orientation, ordered by
/// (line, start). Segments on the same line are separated by at least one
/// cell outside `x`.
std::vector<Segment> maximal_segments(const SubsetMask& x, Orientation orientation);

enum class SegmentClass {
  kInterior,  // touches neither end of its line
  kPrefix,    // starts at position 1, does not reach the end
  kSuffix,    // reaches the end, does not start at 1
  kFull,      // the whole line (includes one-cell lines)
};

SegmentClass classify(const Segment& s, int line_length);

/// Counts of maximal segments per orientation (index 0 horizontal, 1
/// vertical). sigma = interior + prefix + suffix + full.
struct SegmentStats {
  int sigma[2] = {0, 0};
  int interior[2] = {0, 0};
  int prefix[2] = {0, 0};
  int suffix[2] = {0, 0};
  int full[2] = {0, 0};
};

SegmentStats segment_stats(const SubsetMask& x);

// Union of cells covered by the given segments.
SubsetMask cover(int rows, int cols, const std::vector<Segment>& segments);

}  // namespace pbm
