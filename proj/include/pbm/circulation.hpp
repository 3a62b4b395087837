#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pbm/conditions.hpp"
#include "pbm/grid.hpp"
#include "pbm/instance.hpp"

namespace pbm {

enum class ArcTag { kRowPrefix, kColumnPrefix, kEntry, kTotal };

struct Arc {
  int tail;
  int head;
  long long lower;
  long long upper;
  ArcTag tag;
  int row;  // 1-based; 0 for the total arc
  int col;
};

/// The circulation network of a PBM instance.
///
/// Nodes: a row-side node and a column-side node per cell, plus two hubs.
/// Arcs (ids are fixed by (m, n)):
///   row prefix (i,j):    row node (i,j+1) -> row node (i,j); row hub -> (i,n) for j = n
///   column prefix (i,j): col node (i,j) -> col node (i+1,j); (m,j) -> col hub for i = m
///   entry (i,j):         row node (i,j) -> col node (i,j)
///   total:               col hub -> row hub
/// The prefix arcs plus the total arc form a spanning tree; the flow on an
/// entry arc is the matrix entry, on a prefix arc the prefix sum, on the total
/// arc the total sum. Infinite bounds are replaced by +-K.
class Network {
 public:
  /// K defaults to 1 + sum of |finite bounds| + m*n.
  static Network build(const PbmInstance& inst, std::optional<long long> big_k = std::nullopt);

  int rows() const { return m_; }
  int cols() const { return n_; }
  long long big_k() const { return big_k_; }

  int node_count() const { return 2 * m_ * n_ + 2; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int id) const { return arcs_[static_cast<std::size_t>(id)]; }

  int row_node(int i, int j) const { return (i - 1) * n_ + (j - 1); }
  int col_node(int i, int j) const { return m_ * n_ + (i - 1) * n_ + (j - 1); }
  int row_hub() const { return 2 * m_ * n_; }
  int col_hub() const { return 2 * m_ * n_ + 1; }

  int row_prefix_arc(int i, int j) const { return (i - 1) * n_ + (j - 1); }
  int col_prefix_arc(int i, int j) const { return m_ * n_ + (i - 1) * n_ + (j - 1); }
  int entry_arc(int i, int j) const { return 2 * m_ * n_ + (i - 1) * n_ + (j - 1); }
  int total_arc() const { return 3 * m_ * n_; }

  // Restricts the bounds of one arc; used to add sign or residual constraints.
  void tighten(int arc_id, long long lower, long long upper);

  std::string node_name(int v) const;
  std::string to_dot() const;

 private:
  Network(int m, int n, long long big_k) : m_(m), n_(n), big_k_(big_k) {}

  int m_;
  int n_;
  long long big_k_;
  std::vector<Arc> arcs_;
};

long long default_big_k(const PbmInstance& inst);

struct Circulation {
  std::vector<long long> flow;  // indexed by arc id
};

/// A node set W with u(arcs entering W) - l(arcs leaving W) < 0, which rules
/// out every bounded circulation.
class CutWitness {
 public:
  // Recomputes the deficit; throws kInternal unless it is negative.
  CutWitness(const Network& net, std::vector<char> in_w);

  const std::vector<char>& members() const { return in_w_; }
  bool contains(int v) const { return in_w_[static_cast<std::size_t>(v)] != 0; }
  long long deficit() const { return deficit_; }

 private:
  std::vector<char> in_w_;
  long long deficit_;
};

long long hoffman_deficit(const Network& net, const std::vector<char>& in_w);

struct SolveStats {
  long long augmentations = 0;
};

using CirculationResult = std::variant<Circulation, CutWitness>;

/// An integral circulation within the arc bounds, or a violating node set.
CirculationResult find_feasible_circulation(const Network& net, SolveStats* stats = nullptr);

/// A cheapest integral circulation for the per-arc `cost`, or a violating
/// node set when no circulation exists.
CirculationResult min_cost_circulation(const Network& net, std::span<const long long> cost,
                                       SolveStats* stats = nullptr);

long long circulation_cost(const Circulation& z, std::span<const long long> cost);

// True when z conserves flow at every node and respects every arc bound.
bool is_feasible(const Network& net, const Circulation& z);

IntMatrix matrix_from_circulation(const Network& net, const Circulation& z);

/// The circulation carrying the entries, prefix sums and total of `a`.
/// Throws kBoundViolation naming the first violated entry, prefix or total
/// bound of `inst`.
Circulation circulation_from_matrix(const PbmInstance& inst, const IntMatrix& a);

/// A violated inequality for a pair of subsets, with both sides evaluated on
/// the instance. `case_id` in 1..4 records which hubs the cut contained.
struct Certificate {
  SubsetMask x1;
  SubsetMask x2;
  int case_id = 0;
  InequalityValue value;
};

/// Translates a violating node set into subsets (X1, X2) and the inequality
/// they violate, then re-evaluates that inequality on `inst`. Throws
/// kInternal if the re-evaluation does not show a strict violation.
Certificate cut_to_certificate(const PbmInstance& inst, const Network& net, const CutWitness& w);

}  // namespace pbm
