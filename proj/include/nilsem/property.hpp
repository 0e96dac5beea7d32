#ifndef NILSEM_PROPERTY_HPP
#define NILSEM_PROPERTY_HPP

#include <cstdint>
#include <string>

#include "nilsem/limits.hpp"

namespace nilsem {

struct ParityPropertyResult {
  std::uint64_t seed = 0;
  int samples = 0;
  int failures = 0;            // instances where the even and odd sums differ
  std::string first_failure;  // human-readable witness, empty when none
};

// Randomized check of the valuation-parity law: a random monomial over n
// variable groups (n in {2,3}) that touches only k < n of them, a random
// semiring of order <= 4 from a fixed pool, and random tuple bindings; the
// sums of the monomial over all 2^n valuations, split by the parity of the
// number of groups evaluated at the b-tuples, must agree exactly. The seed
// fully determines the run.
ParityPropertyResult run_parity_property(std::uint64_t seed, int samples,
                                         const Limits& limits = {});

}  // namespace nilsem

#endif
