#ifndef NILSEM_ENUMERATE_HPP
#define NILSEM_ENUMERATE_HPP

#include <vector>

#include "nilsem/algebra.hpp"
#include "nilsem/limits.hpp"

namespace nilsem {

struct EnumerationTask {
  int order = 2;
  bool up_to_iso = true;
  bool cancellative_only = false;
  bool with_identity_only = false;
};

// Isomorphism key: the lexicographically least concatenation of the
// (relabelled) addition and multiplication tables over all carrier
// permutations fixing the zero. Two semirings are isomorphic iff their
// encodings are equal.
std::vector<int> canonical_encoding(const Semiring& s);

bool are_isomorphic(const Semiring& a, const Semiring& b);

// Every semiring with absorbing zero 0 on the carrier {0,...,order-1}.
// The addition table is filled first (commutative monoid with identity 0),
// then multiplication under incremental associativity/distributivity
// pruning. With up_to_iso, yields one representative per isomorphism class,
// with canonical tables, ascending by encoding; without it, yields all
// tables in lexicographic order. Filters keep only additively cancellative
// semirings / semirings with a multiplicative identity.
std::vector<Semiring> enumerate_semirings(const EnumerationTask& task, const Limits& limits = {});

}  // namespace nilsem

#endif
