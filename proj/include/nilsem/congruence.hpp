#ifndef NILSEM_CONGRUENCE_HPP
#define NILSEM_CONGRUENCE_HPP

#include <utility>
#include <vector>

#include "nilsem/algebra.hpp"

namespace nilsem {

// Least congruence containing the given pairs, by worklist closure under all
// unary polynomial translations x -> f(c_1,...,x,...,c_m) of basic operations.
Partition congruence_generated_by(const Algebra& alg,
                                  const std::vector<std::pair<int, int>>& pairs,
                                  const Limits& limits = {});

// All congruences of the algebra: principal congruences closed under join.
// Sorted by (block count descending, representative array), so the identity
// comes first and the full relation last. Requires
// order <= limits.lattice_order_bound.
std::vector<Partition> all_congruences(const Algebra& alg, const Limits& limits = {});

}  // namespace nilsem

#endif
