#ifndef NILSEM_IDEALS_HPP
#define NILSEM_IDEALS_HPP

#include <vector>

#include "nilsem/algebra.hpp"

namespace nilsem {

// An ideal is a nonempty subset closed under addition and under
// multiplication by arbitrary semiring elements on both sides. Every ideal
// contains the zero (absorb any member). Elements are kept sorted.
struct Ideal {
  std::vector<int> elems;

  bool contains(int x) const;
  std::string to_string() const;
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.elems == b.elems; }
  friend bool operator<(const Ideal& a, const Ideal& b) { return a.elems < b.elems; }
};

bool is_ideal(const Semiring& s, const std::vector<int>& subset);

// Least ideal containing the (nonempty) seed.
Ideal ideal_closure(const Semiring& s, const std::vector<int>& seed);

// All ideals, sorted by (size, elements). Uses direct subset testing for
// order <= 6 and closure of principal ideals under join above that.
std::vector<Ideal> all_ideals(const Semiring& s);

// {sums of products a_1 * ... * a_k with a_j in factors[j]} — the ideal
// generated multiplicatively by the factor list and closed under addition.
Ideal ideal_product(const Semiring& s, const std::vector<Ideal>& factors);

// ideal_product of n copies of the whole semiring: S^n (S^1 = S).
Ideal power_of_s(const Semiring& s, int n);

// Sum over all permutations pi of ideal_product(I_{pi(1)},...,I_{pi(n)}).
Ideal ideal_commutator(const Semiring& s, const std::vector<Ideal>& factors);

// The congruence a ~ b iff a + i = b + j for some i, j in I. Also computes
// the least congruence collapsing I into the zero class independently and
// throws InternalError if the two constructions ever disagree.
Partition rho_of_ideal(const Semiring& s, const Ideal& ideal);

}  // namespace nilsem

#endif
