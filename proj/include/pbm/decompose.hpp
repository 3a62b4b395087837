#pragma once

#include <vector>

#include "pbm/grid.hpp"
#include "pbm/instance.hpp"

namespace pbm {

struct DecompositionPart {
  IntMatrix matrix;
  int multiplicity = 1;
};

/// Parts sum (with multiplicity) to the decomposed matrix; multiplicities
/// sum to k.
struct Decomposition {
  std::vector<DecompositionPart> parts;

  // The parts with multiplicity expanded, in output order.
  std::vector<IntMatrix> expanded() const;
};

/// The instance whose bounds are floor(lower / k) and ceil(upper / k).
PbmInstance shrink(const PbmInstance& inst, int k);

/// Splits A into k matrices feasible for shrink(inst, k), each agreeing in
/// sign with A at every position. Throws kInfeasibleInput if A violates
/// inst and kInternal if a peeling step finds no circulation.
Decomposition decompose(const PbmInstance& inst, const IntMatrix& a, int k);

/// Throws kNotKRegular naming the first violated condition.
void require_k_regular_asm(const IntMatrix& a, int k);

/// k pairwise pattern-disjoint ASMs summing to the k-regular ASM `a`.
std::vector<IntMatrix> decompose_k_regular_asm(const IntMatrix& a, int k);

}  // namespace pbm
