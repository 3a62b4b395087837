#include "pbm/segments.hpp"

namespace pbm {

std::vector<Segment> maximal_segments(const SubsetMask& x, Orientation orientation) {
  const bool horizontal = orientation == Orientation::kHorizontal;
  const int lines = horizontal ? x.rows() : x.cols();
  const int len = horizontal ? x.cols() : x.rows();
  auto member = [&](int line, int pos) {
    return horizontal ? x(line, pos) != 0 : x(pos, line) != 0;
  };

  std::vector<Segment> out;
  for (int line = 1; line <= lines; ++line) {
    int pos = 1;
    while (pos <= len) {
      if (!member(line, pos)) {
        ++pos;
        continue;
      }
      const int start = pos;
      while (pos <= len && member(line, pos)) ++pos;
      out.push_back({orientation, line, start, pos - 1});
    }
  }
  return out;
}

SegmentClass classify(const Segment& s, int line_length) {
  const bool at_start = s.start == 1;
  const bool at_end = s.end == line_length;
  if (at_start && at_end) return SegmentClass::kFull;
  if (at_start) return SegmentClass::kPrefix;
  if (at_end) return SegmentClass::kSuffix;
  return SegmentClass::kInterior;
}

SegmentStats segment_stats(const SubsetMask& x) {
  SegmentStats st;
  for (int o = 0; o < 2; ++o) {
    const auto orientation = o == 0 ? Orientation::kHorizontal : Orientation::kVertical;
    const int len = o == 0 ? x.cols() : x.rows();
    for (const Segment& s : maximal_segments(x, orientation)) {
      ++st.sigma[o];
      switch (classify(s, len)) {
        case SegmentClass::kInterior: ++st.interior[o]; break;
        case SegmentClass::kPrefix: ++st.prefix[o]; break;
        case SegmentClass::kSuffix: ++st.suffix[o]; break;
        case SegmentClass::kFull: ++st.full[o]; break;
      }
    }
  }
  return st;
}

SubsetMask cover(int rows, int cols, const std::vector<Segment>& segments) {
  SubsetMask out(rows, cols);
  for (const Segment& s : segments) {
    for (int p = s.start; p <= s.end; ++p) {
      if (s.orientation == Orientation::kHorizontal) {
        out(s.line, p) = 1;
      } else {
        out(p, s.line) = 1;
      }
    }
  }
  return out;
}

}  // namespace pbm
