#ifndef NILSEM_ALGEBRA_HPP
#define NILSEM_ALGEBRA_HPP

#include <string>
#include <variant>
#include <vector>

#include "nilsem/errors.hpp"
#include "nilsem/limits.hpp"
#include "nilsem/partition.hpp"

namespace nilsem {

// One finitary operation, tabulated row-major: the first argument varies
// slowest, so for a binary f the cell for (a, b) is table[a * order + b].
struct Operation {
  std::string name;
  int arity = 0;
  std::vector<int> table;

  int apply(const std::vector<int>& args, int order) const;
};

// Finite algebra with an arbitrary finite signature; carrier is {0,...,order-1}.
// This is the substrate everything congruence- and commutator-shaped runs on.
struct Algebra {
  int order = 0;
  std::vector<Operation> ops;

  // Checks table sizes, entry ranges and 1 <= order <= limits.max_order.
  void check(const Limits& limits = {}) const;
};

// Semiring with absorbing zero: (S,+,o) a commutative monoid, (S,·) a
// semigroup, o absorbing for ·, and · distributing over + on both sides.
// No multiplicative identity is required. Instances are only built through
// validate_semiring / make_semiring, so a Semiring is always axiom-checked.
class Semiring {
 public:
  int order() const { return alg_.order; }
  int zero() const { return zero_; }
  int add(int a, int b) const { return alg_.ops[0].table[a * alg_.order + b]; }
  int mul(int a, int b) const { return alg_.ops[1].table[a * alg_.order + b]; }
  const Algebra& algebra() const { return alg_; }
  const std::vector<int>& add_table() const { return alg_.ops[0].table; }
  const std::vector<int>& mul_table() const { return alg_.ops[1].table; }

 private:
  friend std::variant<Semiring, AxiomViolation> validate_semiring(const Algebra&, int,
                                                                  const Limits&);
  Semiring(Algebra alg, int zero) : alg_(std::move(alg)), zero_(zero) {}

  Algebra alg_;  // ops: [0] add, [1] mul, [2] nullary zero
  int zero_;
};

// Builds the standard signature {add/2, mul/2, zero/0} from two tables.
Algebra semiring_algebra(int order, int zero, const std::vector<int>& add,
                         const std::vector<int>& mul);

// Checks the seven axioms in a fixed order (add associativity, add
// commutativity, additive identity, mul associativity, absorbing zero, left
// distributivity, right distributivity) and reports the lexicographically
// first witness of the first failing axiom.
std::variant<Semiring, AxiomViolation> validate_semiring(const Algebra& alg, int zero,
                                                         const Limits& limits = {});

// Throwing convenience wrappers.
Semiring make_semiring(const Algebra& alg, int zero, const Limits& limits = {});
Semiring make_semiring(int order, int zero, const std::vector<std::vector<int>>& add,
                       const std::vector<std::vector<int>>& mul, const Limits& limits = {});

// True iff the partition is compatible with every operation of the algebra.
bool is_congruence(const Algebra& alg, const Partition& p);

// a + c = a + d implies c = d.
bool is_additively_cancellative(const Semiring& s);

// (S,+,o) as a monoid-with-constant, ops {add/2, zero/0}.
Algebra additive_reduct(const Semiring& s);
// (S,·,o) as a semigroup-with-constant, ops {mul/2, zero/0}.
Algebra multiplicative_reduct(const Semiring& s);

// Index of the multiplicative identity, or -1 if there is none.
int multiplicative_identity(const Semiring& s);

// Quotient algebra A/delta together with the class map. Classes are numbered
// by their least representative, ascending, so the construction is canonical.
struct QuotientAlgebra {
  Algebra alg;
  std::vector<int> cls;   // element of A -> class index
  std::vector<int> rep;   // class index -> least representative in A
};
QuotientAlgebra quotient_algebra(const Algebra& a, const Partition& delta);

// Quotient semiring S/delta (delta must be a congruence of S).
Semiring quotient_semiring(const Semiring& s, const Partition& delta);

}  // namespace nilsem

#endif
