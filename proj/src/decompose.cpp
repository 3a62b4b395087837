#include "pbm/decompose.hpp"

#include <algorithm>
#include <variant>

#include "pbm/asmkit.hpp"
#include "pbm/circulation.hpp"

namespace pbm {

namespace {

ExtMatrix map_bounds(const ExtMatrix& x, int k, bool upper) {
  ExtMatrix out(x.rows(), x.cols());
  for (std::size_t c = 0; c < x.size(); ++c) {
    out.flat(c) = upper ? ceil_div(x.flat(c), k) : floor_div(x.flat(c), k);
  }
  return out;
}

std::string pos(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

std::vector<IntMatrix> Decomposition::expanded() const {
  std::vector<IntMatrix> out;
  for (const DecompositionPart& p : parts) {
    for (int c = 0; c < p.multiplicity; ++c) out.push_back(p.matrix);
  }
  return out;
}

PbmInstance shrink(const PbmInstance& inst, int k) {
  if (k < 1) throw Error(ErrorCode::kBadParams, "k must be positive");
  PbmInstance out = inst;
  out.phi1 = map_bounds(inst.phi1, k, false);
  out.gamma1 = map_bounds(inst.gamma1, k, true);
  out.phi2 = map_bounds(inst.phi2, k, false);
  out.gamma2 = map_bounds(inst.gamma2, k, true);
  out.f = map_bounds(inst.f, k, false);
  out.g = map_bounds(inst.g, k, true);
  out.alpha = floor_div(inst.alpha, k);
  out.beta = ceil_div(inst.beta, k);
  return out;
}

Decomposition decompose(const PbmInstance& inst, const IntMatrix& a, int k) {
  if (k < 1) throw Error(ErrorCode::kBadParams, "k must be positive");
  Circulation target;
  try {
    target = circulation_from_matrix(inst, a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBoundViolation) throw;
    throw Error(ErrorCode::kInfeasibleInput, e.what());
  }
  Decomposition out;
  if (k == 1) {
    out.parts.push_back({a, 1});
    return out;
  }

  const PbmInstance small = shrink(inst, k);
  long long mass = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    mass = checked_add(mass, a.flat(c) < 0 ? -a.flat(c) : a.flat(c));
  }
  // K must also exceed every flow value of A's circulation.
  const Network base = Network::build(small, checked_add(default_big_k(small), mass));
  std::vector<long long> residual = target.flow;
  std::vector<IntMatrix> parts;

  for (int left = k; left >= 2; --left) {
    Network step = base;
    for (int id = 0; id < step.arc_count(); ++id) {
      const Arc& arc = base.arc(id);
      const long long r = residual[static_cast<std::size_t>(id)];
      long long lo = std::max(arc.lower, checked_add(r, -checked_mul(left - 1, arc.upper)));
      long long hi = std::min(arc.upper, checked_add(r, -checked_mul(left - 1, arc.lower)));
      if (arc.tag == ArcTag::kEntry) {
        const long long sign = target.flow[static_cast<std::size_t>(id)];
        if (sign >= 0) lo = std::max(lo, 0LL);
        if (sign <= 0) hi = std::min(hi, 0LL);
      }
      if (lo > hi) {
        throw Error(ErrorCode::kInternal, "empty arc range while peeling part " +
                                              std::to_string(k - left + 1));
      }
      step.tighten(id, lo, hi);
    }
    CirculationResult z = find_feasible_circulation(step);
    const auto* peeled = std::get_if<Circulation>(&z);
    if (peeled == nullptr) {
      throw Error(ErrorCode::kInternal,
                  "no circulation while peeling part " + std::to_string(k - left + 1));
    }
    for (std::size_t id = 0; id < residual.size(); ++id) residual[id] -= peeled->flow[id];
    parts.push_back(matrix_from_circulation(base, *peeled));
  }
  Circulation last{residual};
  if (!is_feasible(base, last)) {
    throw Error(ErrorCode::kInternal, "final residual is not a circulation of the shrunk network");
  }
  parts.push_back(matrix_from_circulation(base, last));

  for (IntMatrix& p : parts) {
    if (!out.parts.empty() && out.parts.back().matrix == p) {
      ++out.parts.back().multiplicity;
    } else {
      out.parts.push_back({std::move(p), 1});
    }
  }
  return out;
}

void require_k_regular_asm(const IntMatrix& a, int k) {
  if (k < 1) throw Error(ErrorCode::kBadParams, "k must be positive");
  const int n = a.rows();
  if (n < 1 || a.cols() != n) throw Error(ErrorCode::kNotKRegular, "matrix is not square");
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (a(i, j) < -1 || a(i, j) > 1) {
        throw Error(ErrorCode::kNotKRegular, "entry outside {-1,0,1} at " + pos(i, j));
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    long long s = 0;
    for (int j = 1; j <= n; ++j) {
      s += a(i, j);
      if (s < 0 || s > k) {
        throw Error(ErrorCode::kNotKRegular, "horizontal prefix sum " + std::to_string(s) +
                                                 " outside [0," + std::to_string(k) + "] at " +
                                                 pos(i, j));
      }
    }
    if (s != k) {
      throw Error(ErrorCode::kNotKRegular,
                  "row " + std::to_string(i) + " sums to " + std::to_string(s));
    }
  }
  for (int j = 1; j <= n; ++j) {
    long long s = 0;
    for (int i = 1; i <= n; ++i) {
      s += a(i, j);
      if (s < 0 || s > k) {
        throw Error(ErrorCode::kNotKRegular, "vertical prefix sum " + std::to_string(s) +
                                                 " outside [0," + std::to_string(k) + "] at " +
                                                 pos(i, j));
      }
    }
    if (s != k) {
      throw Error(ErrorCode::kNotKRegular,
                  "column " + std::to_string(j) + " sums to " + std::to_string(s));
    }
  }
}

std::vector<IntMatrix> decompose_k_regular_asm(const IntMatrix& a, int k) {
  require_k_regular_asm(a, k);
  return decompose(make_k_regular(a.rows(), k), a, k).expanded();
}

}  // namespace pbm
