#ifndef NILSEM_COMMUTATOR_HPP
#define NILSEM_COMMUTATOR_HPP

#include <optional>
#include <vector>

#include "nilsem/algebra.hpp"

namespace nilsem {

// The cube algebra for dimensions (theta_0,...,theta_{n-1}): the subalgebra
// of A^(2^n) generated by all constant tuples and, per dimension i and pair
// (a,b) in theta_i, the tuple holding a where bit i of the coordinate index
// is clear and b where it is set. Its members are exactly the value arrays
// (p at the chosen tuples)_v of polynomials p evaluated at all 2^n ways of
// choosing the a- or b-side per dimension.
struct CubeAlgebra {
  int dim = 0;
  int base_order = 0;
  // Deduplicated, lexicographically sorted. tuples[t][w] is the value at
  // valuation w, where bit i of w set means dimension i took its b-side.
  std::vector<std::vector<int>> tuples;
};

CubeAlgebra generate_cube(const Algebra& a, const std::vector<Partition>& args,
                          const Limits& limits = {});

// A cube witnessing a failed centralizing condition: its premise pairs are
// delta-related but its conclusion pair is not. Coordinates as in CubeAlgebra.
struct CounterexampleCube {
  int dim = 0;
  std::vector<int> tuple;
  // Conclusion pair: values at the two all-b-except-last-dimension coordinates.
  int conclusion_first() const { return tuple[(tuple.size() >> 1) - 1]; }
  int conclusion_second() const { return tuple.back(); }
};

// The centralizing condition C(theta_0,...,theta_{k-1}; theta_k ; delta):
// for every cube over (theta_0,...,theta_k), if the value pairs across the
// last dimension are delta-related at every choice w of the first k
// dimensions except w = all-b, then they are delta-related at w = all-b too.
// Returns the first violating cube in iteration order, or nothing.
std::optional<CounterexampleCube> centralizes_counterexample(const Algebra& a,
                                                             const std::vector<Partition>& args,
                                                             const Partition& delta,
                                                             const Limits& limits = {});
bool centralizes(const Algebra& a, const std::vector<Partition>& args, const Partition& delta,
                 const Limits& limits = {});

// One generator pair added to the running congruence during the commutator
// fixpoint, with the violating cube it came from. The cube lives in the
// quotient of the algebra by the congruence reached so far; its entries are
// the least representatives of the quotient classes.
struct CommutatorStep {
  int first = 0, second = 0;        // added pair (class representatives)
  Partition reached_before;          // congruence at the time of the violation
  CounterexampleCube witness;        // cube over the quotient, entries are class reps
};

// The n-ary term-condition commutator [args[0],...,args[n-1]]: the least
// congruence delta satisfying the centralizing condition with the last
// argument in the conclusion seat. Computed as a growing fixpoint: find a
// violating cube, merge its conclusion pair, restart on the quotient by the
// enlarged congruence; the certificate round sees no violation. If `steps`
// is given, every merge is recorded there.
Partition higher_commutator(const Algebra& a, const std::vector<Partition>& args,
                            const Limits& limits = {},
                            std::vector<CommutatorStep>* steps = nullptr);

// Binary commutator via the two-by-two matrix form (single premise pair):
// an implementation independent of the cube machinery, for cross-checking.
Partition binary_commutator_tc(const Algebra& a, const Partition& alpha, const Partition& beta,
                               const Limits& limits = {});

// Lower central series (1,1], (1,(1,1]], ...: term k of the chain
// gamma_1 = [1,1], gamma_{j+1} = [1, gamma_j].
Partition nilpotent_series_term(const Algebra& a, int k, const Limits& limits = {});
// Derived series [1,1], [[1,1],[1,1]], ...: sigma_1 = [1,1],
// sigma_{j+1} = [sigma_j, sigma_j].
Partition solvable_series_term(const Algebra& a, int k, const Limits& limits = {});

// Series tests: k-nilpotent / k-solvable when the respective term collapses
// to the trivial congruence; n-supernilpotent when the (n+1)-ary commutator
// of n+1 copies of the full congruence is trivial.
bool is_n_nilpotent(const Algebra& a, int n, const Limits& limits = {});
bool is_n_solvable(const Algebra& a, int n, const Limits& limits = {});
bool is_n_supernilpotent(const Algebra& a, int n, const Limits& limits = {});

}  // namespace nilsem

#endif
