#ifndef NILSEM_LIMITS_HPP
#define NILSEM_LIMITS_HPP

#include <cstddef>

namespace nilsem {

// Resource bounds. Everything here is a guard rail, not a tuning knob: the
// algorithms are exact and the bounds only decide when to refuse an input
// with SizeError instead of grinding.
struct Limits {
  int max_order = 16;             // largest carrier handled anywhere
  int lattice_order_bound = 8;    // full congruence-lattice enumeration
  int enumeration_order_bound = 4;  // exhaustive semiring enumeration
  int dim_budget = 4;             // cube dimension (commutator arity)
  std::size_t tuple_budget = 2'000'000;    // stored cube tuples per closure
  std::size_t work_budget = 400'000'000;   // op applications per closure
};

}  // namespace nilsem

#endif
