#ifndef NILSEM_FIXTURES_HPP
#define NILSEM_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "nilsem/algebra.hpp"

namespace nilsem {

// Named example semirings used by tests and the built-in verification
// command. All use 0 as the zero element.

// Two-element join semilattice {bot, top} under max, with constantly-bot
// multiplication. The classic witness that the binary commutator of full
// congruences can be full while the square of the carrier is {bot}.
Semiring fixture_join_zero();

// Two-element Boolean semiring: max as addition, min as multiplication.
Semiring fixture_boolean();

// The two-element field: xor and and.
Semiring fixture_field2();

// Cyclic group of order n under addition, with all products zero.
Semiring fixture_zero_ring(int n);

// The even residues {0,2,4,6} modulo 8, indexed as 0..3 (index i stands for
// 2i): nilpotent of degree 2 but not abelian.
Semiring fixture_even_mod8();

// All fixtures with their names, in a fixed order.
std::vector<std::pair<std::string, Semiring>> all_fixtures();

}  // namespace nilsem

#endif
