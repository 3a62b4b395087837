#include "pbm/circulation.hpp"

#include <sstream>

#include "flow_graph.hpp"
#include "pbm/strong_pair.hpp"

namespace pbm {

namespace {

long long abs_finite(ExtInt x) {
  if (!x.is_finite()) return 0;
  const long long v = x.value();
  return v < 0 ? checked_mul(v, -1) : v;
}

long long sum_abs_finite(const ExtMatrix& x) {
  long long s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s = checked_add(s, abs_finite(x.flat(k)));
  return s;
}

long long substitute(ExtInt x, long long big_k) {
  if (x.is_neg_inf()) return -big_k;
  if (x.is_pos_inf()) return big_k;
  return x.value();
}

std::string cell_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Lower-bound elimination: flow z = lower + y with 0 <= y <= upper - lower.
// Arcs listed in `reversed` start saturated (y = cap) and are represented by
// a residual edge head -> tail carrying the amount by which y is reduced.
struct ReducedProblem {
  internal::FlowGraph graph;
  int source;
  int sink;
  std::vector<int> edge_of_arc;
  std::vector<char> reversed;
  long long supply = 0;
};

ReducedProblem reduce(const Network& net, std::span<const long long> cost) {
  const int nodes = net.node_count();
  ReducedProblem r{internal::FlowGraph(nodes + 2), nodes, nodes + 1, {}, {}, 0};
  std::vector<long long> excess(static_cast<std::size_t>(nodes), 0);
  r.edge_of_arc.resize(static_cast<std::size_t>(net.arc_count()));
  r.reversed.assign(static_cast<std::size_t>(net.arc_count()), 0);
  for (int id = 0; id < net.arc_count(); ++id) {
    const Arc& a = net.arc(id);
    const long long cap = checked_add(a.upper, -a.lower);
    const long long c = cost.empty() ? 0 : cost[static_cast<std::size_t>(id)];
    long long initial = a.lower;
    if (c < 0) {
      r.reversed[static_cast<std::size_t>(id)] = 1;
      initial = a.upper;
      r.edge_of_arc[static_cast<std::size_t>(id)] = r.graph.add_edge(a.head, a.tail, cap, -c);
    } else {
      r.edge_of_arc[static_cast<std::size_t>(id)] = r.graph.add_edge(a.tail, a.head, cap, c);
    }
    excess[static_cast<std::size_t>(a.head)] = checked_add(excess[static_cast<std::size_t>(a.head)], initial);
    excess[static_cast<std::size_t>(a.tail)] = checked_add(excess[static_cast<std::size_t>(a.tail)], -initial);
  }
  for (int v = 0; v < nodes; ++v) {
    const long long e = excess[static_cast<std::size_t>(v)];
    if (e > 0) {
      r.graph.add_edge(r.source, v, e);
      r.supply = checked_add(r.supply, e);
    } else if (e < 0) {
      r.graph.add_edge(v, r.sink, -e);
    }
  }
  return r;
}

Circulation extract(const Network& net, const ReducedProblem& r) {
  Circulation z;
  z.flow.resize(static_cast<std::size_t>(net.arc_count()));
  for (int id = 0; id < net.arc_count(); ++id) {
    const Arc& a = net.arc(id);
    const long long moved = r.graph.flow(r.edge_of_arc[static_cast<std::size_t>(id)]);
    z.flow[static_cast<std::size_t>(id)] =
        r.reversed[static_cast<std::size_t>(id)] ? a.upper - moved : a.lower + moved;
  }
  return z;
}

CutWitness witness_from_residual(const Network& net, const ReducedProblem& r) {
  const std::vector<char> reach = r.graph.reachable_from(r.source);
  std::vector<char> in_w(static_cast<std::size_t>(net.node_count()));
  for (int v = 0; v < net.node_count(); ++v) {
    in_w[static_cast<std::size_t>(v)] = reach[static_cast<std::size_t>(v)] ? 0 : 1;
  }
  return CutWitness(net, std::move(in_w));
}

}  // namespace

long long default_big_k(const PbmInstance& inst) {
  long long s = 1;
  for (const ExtMatrix* x : {&inst.phi1, &inst.gamma1, &inst.phi2, &inst.gamma2, &inst.f, &inst.g}) {
    s = checked_add(s, sum_abs_finite(*x));
  }
  s = checked_add(s, abs_finite(inst.alpha));
  s = checked_add(s, abs_finite(inst.beta));
  return checked_add(s, checked_mul(inst.m, inst.n));
}

Network Network::build(const PbmInstance& inst, std::optional<long long> big_k) {
  const long long k = big_k ? *big_k : default_big_k(inst);
  if (k <= 0) throw Error(ErrorCode::kBadParams, "K must be positive");
  Network net(inst.m, inst.n, k);
  const int m = inst.m;
  const int n = inst.n;
  net.arcs_.reserve(static_cast<std::size_t>(3 * m * n + 1));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int tail = j < n ? net.row_node(i, j + 1) : net.row_hub();
      net.arcs_.push_back({tail, net.row_node(i, j), substitute(inst.phi1(i, j), k),
                           substitute(inst.gamma1(i, j), k), ArcTag::kRowPrefix, i, j});
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int head = i < m ? net.col_node(i + 1, j) : net.col_hub();
      net.arcs_.push_back({net.col_node(i, j), head, substitute(inst.phi2(i, j), k),
                           substitute(inst.gamma2(i, j), k), ArcTag::kColumnPrefix, i, j});
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      net.arcs_.push_back({net.row_node(i, j), net.col_node(i, j), substitute(inst.f(i, j), k),
                           substitute(inst.g(i, j), k), ArcTag::kEntry, i, j});
    }
  }
  net.arcs_.push_back({net.col_hub(), net.row_hub(), substitute(inst.alpha, k),
                       substitute(inst.beta, k), ArcTag::kTotal, 0, 0});
  return net;
}

void Network::tighten(int arc_id, long long lower, long long upper) {
  Arc& a = arcs_.at(static_cast<std::size_t>(arc_id));
  a.lower = std::max(a.lower, lower);
  a.upper = std::min(a.upper, upper);
}

std::string Network::node_name(int v) const {
  if (v == row_hub()) return "r0";
  if (v == col_hub()) return "c0";
  const bool row_side = v < m_ * n_;
  const int k = row_side ? v : v - m_ * n_;
  return (row_side ? "r" : "c") + std::to_string(k / n_ + 1) + "_" + std::to_string(k % n_ + 1);
}

std::string Network::to_dot() const {
  std::ostringstream os;
  os << "digraph pbm {\n";
  for (const Arc& a : arcs_) {
    os << "  " << node_name(a.tail) << " -> " << node_name(a.head) << " [label=\"[" << a.lower
       << "," << a.upper << "]\"";
    if (a.tag == ArcTag::kEntry) os << ", style=dotted";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

long long hoffman_deficit(const Network& net, const std::vector<char>& in_w) {
  long long d = 0;
  for (const Arc& a : net.arcs()) {
    const bool tail_in = in_w[static_cast<std::size_t>(a.tail)] != 0;
    const bool head_in = in_w[static_cast<std::size_t>(a.head)] != 0;
    if (!tail_in && head_in) d = checked_add(d, a.upper);
    if (tail_in && !head_in) d = checked_add(d, -a.lower);
  }
  return d;
}

CutWitness::CutWitness(const Network& net, std::vector<char> in_w)
    : in_w_(std::move(in_w)), deficit_(0) {
  if (static_cast<int>(in_w_.size()) != net.node_count()) {
    throw Error(ErrorCode::kInternal, "cut witness has the wrong node count");
  }
  deficit_ = hoffman_deficit(net, in_w_);
  if (deficit_ >= 0) {
    throw Error(ErrorCode::kInternal,
                "cut witness does not violate the circulation condition (deficit " +
                    std::to_string(deficit_) + ")");
  }
}

CirculationResult find_feasible_circulation(const Network& net, SolveStats* stats) {
  ReducedProblem r = reduce(net, {});
  const long long flow =
      r.graph.max_flow(r.source, r.sink, stats ? &stats->augmentations : nullptr);
  if (flow == r.supply) return extract(net, r);
  return witness_from_residual(net, r);
}

CirculationResult min_cost_circulation(const Network& net, std::span<const long long> cost,
                                       SolveStats* stats) {
  if (static_cast<int>(cost.size()) != net.arc_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "cost vector length differs from the arc count");
  }
  ReducedProblem r = reduce(net, cost);
  const auto result =
      r.graph.min_cost_flow(r.source, r.sink, stats ? &stats->augmentations : nullptr);
  if (result.flow == r.supply) return extract(net, r);
  return find_feasible_circulation(net, stats);
}

long long circulation_cost(const Circulation& z, std::span<const long long> cost) {
  long long c = 0;
  for (std::size_t k = 0; k < z.flow.size(); ++k) c = checked_add(c, checked_mul(z.flow[k], cost[k]));
  return c;
}

bool is_feasible(const Network& net, const Circulation& z) {
  if (static_cast<int>(z.flow.size()) != net.arc_count()) return false;
  std::vector<long long> balance(static_cast<std::size_t>(net.node_count()), 0);
  for (int id = 0; id < net.arc_count(); ++id) {
    const Arc& a = net.arc(id);
    const long long x = z.flow[static_cast<std::size_t>(id)];
    if (x < a.lower || x > a.upper) return false;
    balance[static_cast<std::size_t>(a.head)] += x;
    balance[static_cast<std::size_t>(a.tail)] -= x;
  }
  for (long long b : balance) {
    if (b != 0) return false;
  }
  return true;
}

IntMatrix matrix_from_circulation(const Network& net, const Circulation& z) {
  IntMatrix a(net.rows(), net.cols());
  for (int i = 1; i <= net.rows(); ++i) {
    for (int j = 1; j <= net.cols(); ++j) {
      a(i, j) = z.flow[static_cast<std::size_t>(net.entry_arc(i, j))];
    }
  }
  return a;
}

Circulation circulation_from_matrix(const PbmInstance& inst, const IntMatrix& a) {
  if (!a.same_shape(inst.m, inst.n)) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix does not match the instance dimensions");
  }
  const int m = inst.m;
  const int n = inst.n;
  auto outside = [](long long x, ExtInt lo, ExtInt hi) {
    return ExtInt(x) < lo || ExtInt(x) > hi;
  };
  Circulation z;
  z.flow.assign(static_cast<std::size_t>(3 * m * n + 1), 0);
  auto at = [&](int id) -> long long& { return z.flow[static_cast<std::size_t>(id)]; };
  const int mn = m * n;

  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (outside(a(i, j), inst.f(i, j), inst.g(i, j))) {
        throw Error(ErrorCode::kBoundViolation, "entry bound violated at " + cell_name(i, j));
      }
      at(2 * mn + (i - 1) * n + (j - 1)) = a(i, j);
    }
  }
  long long total = 0;
  for (int i = 1; i <= m; ++i) {
    long long s = 0;
    for (int j = 1; j <= n; ++j) {
      s = checked_add(s, a(i, j));
      if (outside(s, inst.phi1(i, j), inst.gamma1(i, j))) {
        throw Error(ErrorCode::kBoundViolation,
                    "horizontal prefix bound violated at " + cell_name(i, j));
      }
      at((i - 1) * n + (j - 1)) = s;
    }
    total = checked_add(total, s);
  }
  for (int j = 1; j <= n; ++j) {
    long long s = 0;
    for (int i = 1; i <= m; ++i) {
      s = checked_add(s, a(i, j));
      if (outside(s, inst.phi2(i, j), inst.gamma2(i, j))) {
        throw Error(ErrorCode::kBoundViolation,
                    "vertical prefix bound violated at " + cell_name(i, j));
      }
      at(mn + (i - 1) * n + (j - 1)) = s;
    }
  }
  if (outside(total, inst.alpha, inst.beta)) {
    throw Error(ErrorCode::kBoundViolation, "total-sum bound violated");
  }
  at(3 * mn) = total;
  return z;
}

Certificate cut_to_certificate(const PbmInstance& inst, const Network& net, const CutWitness& w) {
  if (net.rows() != inst.m || net.cols() != inst.n) {
    throw Error(ErrorCode::kDimensionMismatch, "network does not match the instance");
  }
  const bool row_hub_in = w.contains(net.row_hub());
  const bool col_hub_in = w.contains(net.col_hub());
  // The row-side set is taken inside W when the row hub is outside it, and
  // as the complement otherwise; likewise for the column side.
  Certificate cert;
  cert.x1 = SubsetMask(inst.m, inst.n);
  cert.x2 = SubsetMask(inst.m, inst.n);
  for (int i = 1; i <= inst.m; ++i) {
    for (int j = 1; j <= inst.n; ++j) {
      cert.x1(i, j) = w.contains(net.row_node(i, j)) != row_hub_in ? 1 : 0;
      cert.x2(i, j) = w.contains(net.col_node(i, j)) != col_hub_in ? 1 : 0;
    }
  }
  Inequality which;
  if (row_hub_in && col_hub_in) {
    cert.case_id = 1;
    which = Inequality::kRowColumn;
  } else if (!row_hub_in && !col_hub_in) {
    cert.case_id = 2;
    which = Inequality::kColumnRow;
  } else if (col_hub_in) {
    cert.case_id = 3;
    which = Inequality::kTotalLower;
  } else {
    cert.case_id = 4;
    which = Inequality::kTotalUpper;
  }
  cert.value = evaluate(inst, cert.x1, cert.x2, which);
  if (cert.value.holds()) {
    throw Error(ErrorCode::kInternal,
                "certificate re-evaluation does not confirm the violation of " +
                    std::string(inequality_id(which)) + ": " + cert.value.lhs.to_string() +
                    " <= " + cert.value.rhs.to_string());
  }
  return cert;
}

}  // namespace pbm
