#pragma once

// Random instance and subset generators shared by the test binaries.

#include <algorithm>
#include <random>

#include "pbm/grid.hpp"
#include "pbm/instance.hpp"

namespace pbm::gen {

struct RandomSpec {
  int m = 2;
  int n = 3;
  long long entry_lo = -2;
  long long entry_hi = 2;
  long long bound_lo = -3;
  long long bound_hi = 3;
  double inf_prob = 0.15;    // chance that a prefix bound is infinite
  double total_prob = 0.3;   // chance that alpha / beta are finite
  bool finite_entries = true;
};

inline long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline bool coin(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

inline void random_pair(std::mt19937_64& rng, ExtInt& lo, ExtInt& hi,
                        long long min_v, long long max_v, double inf_prob) {
  long long a = uniform(rng, min_v, max_v);
  long long b = uniform(rng, min_v, max_v);
  if (a > b) std::swap(a, b);
  lo = coin(rng, inf_prob) ? ExtInt::neg_inf() : ExtInt(a);
  hi = coin(rng, inf_prob) ? ExtInt::pos_inf() : ExtInt(b);
}

/// Independent random bounds; feasibility is left to chance.
inline PbmInstance random_instance(std::mt19937_64& rng, const RandomSpec& s) {
  PbmInstance inst;
  inst.m = s.m;
  inst.n = s.n;
  inst.phi1 = inst.gamma1 = inst.phi2 = inst.gamma2 = inst.f = inst.g = ExtMatrix(s.m, s.n);
  for (int i = 1; i <= s.m; ++i) {
    for (int j = 1; j <= s.n; ++j) {
      random_pair(rng, inst.phi1(i, j), inst.gamma1(i, j), s.bound_lo, s.bound_hi, s.inf_prob);
      random_pair(rng, inst.phi2(i, j), inst.gamma2(i, j), s.bound_lo, s.bound_hi, s.inf_prob);
      random_pair(rng, inst.f(i, j), inst.g(i, j), s.entry_lo, s.entry_hi,
                  s.finite_entries ? 0.0 : s.inf_prob);
    }
  }
  if (coin(rng, s.total_prob)) {
    ExtInt lo, hi;
    random_pair(rng, lo, hi, -2 * s.bound_hi, 2 * s.bound_hi, 0.0);
    if (coin(rng, 0.5)) lo = ExtInt::neg_inf();
    if (coin(rng, 0.5)) hi = ExtInt::pos_inf();
    inst.alpha = lo;
    inst.beta = hi;
  }
  return validate_instance(inst);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, int m, int n, long long lo, long long hi) {
  IntMatrix a(m, n);
  for (std::size_t k = 0; k < a.size(); ++k) a.flat(k) = uniform(rng, lo, hi);
  return a;
}

/// Bounds drawn around the prefix sums of a hidden matrix, so the instance
/// is feasible. `slack` widens each bound by up to that amount.
inline PbmInstance feasible_instance(std::mt19937_64& rng, int m, int n, long long slack,
                                     IntMatrix* hidden = nullptr) {
  const IntMatrix a = random_matrix(rng, m, n, -1, 1);
  PbmInstance inst;
  inst.m = m;
  inst.n = n;
  inst.phi1 = inst.gamma1 = inst.phi2 = inst.gamma2 = inst.f = inst.g = ExtMatrix(m, n);
  long long total = 0;
  for (int i = 1; i <= m; ++i) {
    long long s = 0;
    for (int j = 1; j <= n; ++j) {
      s += a(i, j);
      inst.phi1(i, j) = s - uniform(rng, 0, slack);
      inst.gamma1(i, j) = s + uniform(rng, 0, slack);
      inst.f(i, j) = a(i, j) - uniform(rng, 0, slack);
      inst.g(i, j) = a(i, j) + uniform(rng, 0, slack);
    }
    total += s;
  }
  for (int j = 1; j <= n; ++j) {
    long long s = 0;
    for (int i = 1; i <= m; ++i) {
      s += a(i, j);
      inst.phi2(i, j) = s - uniform(rng, 0, slack);
      inst.gamma2(i, j) = s + uniform(rng, 0, slack);
    }
  }
  if (coin(rng, 0.3)) {
    inst.alpha = total - uniform(rng, 0, slack);
    inst.beta = total + uniform(rng, 0, slack);
  }
  if (hidden) *hidden = a;
  return validate_instance(inst);
}

/// A feasible instance with some bounds opened to infinity and one bound
/// tightened by `shift`, so roughly half the draws stay feasible.
inline PbmInstance perturbed_instance(std::mt19937_64& rng, int m, int n, long long shift = 1) {
  PbmInstance inst = feasible_instance(rng, m, n, 1);
  ExtMatrix* lower[] = {&inst.phi1, &inst.phi2, &inst.f};
  ExtMatrix* upper[] = {&inst.gamma1, &inst.gamma2, &inst.g};
  for (int k = 0; k < 3; ++k) {
    for (std::size_t c = 0; c < inst.phi1.size(); ++c) {
      if (k < 2 && coin(rng, 0.1)) lower[k]->flat(c) = ExtInt::neg_inf();
      if (k < 2 && coin(rng, 0.1)) upper[k]->flat(c) = ExtInt::pos_inf();
    }
  }
  const int k = static_cast<int>(uniform(rng, 0, 2));
  const std::size_t c = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(inst.phi1.size()) - 1));
  ExtInt& lo = lower[k]->flat(c);
  ExtInt& hi = upper[k]->flat(c);
  if (coin(rng, 0.5)) {
    if (lo.is_finite()) lo = std::min(lo + ExtInt(shift), hi);
  } else {
    if (hi.is_finite()) hi = std::max(hi - ExtInt(shift), lo);
  }
  return validate_instance(inst);
}

inline SubsetMask random_mask(std::mt19937_64& rng, int m, int n, double p = 0.5) {
  SubsetMask x(m, n);
  for (std::size_t k = 0; k < x.size(); ++k) x.flat(k) = coin(rng, p) ? 1 : 0;
  return x;
}

}  // namespace pbm::gen
