#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "doctest.h"
#include "nilsem/algebra.hpp"
#include "nilsem/commutator.hpp"
#include "nilsem/congruence.hpp"
#include "nilsem/enumerate.hpp"
#include "nilsem/errors.hpp"
#include "nilsem/fixtures.hpp"
#include "nilsem/io.hpp"
#include "nilsem/limits.hpp"
#include "nilsem/partition.hpp"

using namespace nilsem;

namespace {

// The centralizing condition evaluated by scanning the full cube, written
// against the public tuple layout only: coordinate w of a tuple is the value
// at the valuation whose bit i picks the b-side of dimension i. Premises are
// the value pairs across the last dimension at every choice of the other
// dimensions except all-b; the conclusion is the pair at all-b.
bool centralizes_oracle(const Algebra& a, const std::vector<Partition>& args,
                        const Partition& delta) {
  CubeAlgebra cube = generate_cube(a, args);
  int flip = 1 << (cube.dim - 1);
  for (const std::vector<int>& t : cube.tuples) {
    bool premises_hold = true;
    for (int w = 0; w + 1 < flip && premises_hold; ++w)
      premises_hold = delta.same(t[w], t[w | flip]);
    if (premises_hold && !delta.same(t[flip - 1], t[(flip - 1) | flip])) return false;
  }
  return true;
}

// The least congruence delta with the centralizing condition, found by
// scanning the whole congruence lattice. The commutator must equal the meet
// of all centralizing congruences (and itself centralize).
Partition least_centralizing(const Algebra& a, const std::vector<Partition>& args) {
  std::optional<Partition> least;
  for (const Partition& delta : all_congruences(a))
    if (centralizes_oracle(a, args, delta)) {
      if (!least)
        least = delta;
      else
        least = meet(*least, delta);
    }
  REQUIRE(least.has_value());  // the full congruence always centralizes
  return *least;
}

std::vector<int> tuple(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

TEST_CASE("the binary cube of the join-zero semiring is the frozen ten-tuple set") {
  Semiring s = fixture_join_zero();
  Partition full = Partition::full(2);
  CubeAlgebra cube = generate_cube(s.algebra(), {full, full});
  CHECK(cube.dim == 2);
  CHECK(cube.base_order == 2);
  // join-closure of the four indicator tuples and both diagonals; products
  // all collapse to bottom, so no tuple with a lone top is reachable
  std::vector<std::vector<int>> expected = {
      tuple({0, 0, 0, 0}), tuple({0, 0, 1, 1}), tuple({0, 1, 0, 1}), tuple({0, 1, 1, 1}),
      tuple({1, 0, 1, 0}), tuple({1, 0, 1, 1}), tuple({1, 1, 0, 0}), tuple({1, 1, 0, 1}),
      tuple({1, 1, 1, 0}), tuple({1, 1, 1, 1}),
  };
  CHECK(cube.tuples == expected);
}

TEST_CASE("cubes contain the diagonals and indicator tuples and are operation-closed") {
  EnumerationTask task;
  task.order = 3;
  std::vector<Semiring> pool = enumerate_semirings(task);
  pool.push_back(fixture_even_mod8());
  for (const Semiring& s : pool) {
    CAPTURE(emit_semiring_json(s));
    const Algebra& alg = s.algebra();
    std::vector<Partition> cons = all_congruences(alg);
    // use the full congruence and, when present, a proper one
    for (const Partition& beta : cons) {
      if (beta.is_identity()) continue;
      std::vector<Partition> args = {Partition::full(s.order()), beta};
      CubeAlgebra cube = generate_cube(alg, args);
      std::set<std::vector<int>> member(cube.tuples.begin(), cube.tuples.end());
      int coords = 1 << cube.dim;
      // diagonals
      for (int x = 0; x < s.order(); ++x)
        CHECK(member.count(std::vector<int>(coords, x)) == 1);
      // indicator tuples for every related pair in every dimension
      for (int d = 0; d < cube.dim; ++d)
        for (int x = 0; x < s.order(); ++x)
          for (int y = 0; y < s.order(); ++y) {
            if (x == y || !args[d].same(x, y)) continue;
            std::vector<int> ind(coords);
            for (int w = 0; w < coords; ++w) ind[w] = (w >> d) & 1 ? y : x;
            CHECK(member.count(ind) == 1);
          }
      // closed under both operations applied coordinatewise
      for (const auto& t1 : cube.tuples)
        for (const auto& t2 : cube.tuples) {
          std::vector<int> sum(coords), prod(coords);
          for (int w = 0; w < coords; ++w) {
            sum[w] = s.add(t1[w], t2[w]);
            prod[w] = s.mul(t1[w], t2[w]);
          }
          CHECK(member.count(sum) == 1);
          CHECK(member.count(prod) == 1);
        }
    }
  }
}

TEST_CASE("cube arity and size guards") {
  Semiring s = fixture_boolean();
  CHECK_THROWS_AS(generate_cube(s.algebra(), {}), ArityError);
  Partition full2 = Partition::full(2);
  std::vector<Partition> five(5, full2);
  CHECK_THROWS_AS(generate_cube(s.algebra(), five), SizeError);  // beyond the dimension budget
  Partition wrong_order = Partition::full(3);
  CHECK_THROWS_AS(generate_cube(s.algebra(), {wrong_order, full2}), DomainError);
  // a partition that fails compatibility is rejected as an argument
  Semiring e = fixture_even_mod8();
  Partition bad = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
  REQUIRE_FALSE(is_congruence(e.algebra(), bad));
  CHECK_THROWS_AS(generate_cube(e.algebra(), {bad, Partition::full(4)}), DomainError);
  CHECK_THROWS_AS(higher_commutator(e.algebra(), {Partition::full(4), bad}), DomainError);
}

TEST_CASE("tight tuple budgets surface as SizeError") {
  Limits tight;
  tight.tuple_budget = 4;
  Semiring s = fixture_even_mod8();
  Partition full = Partition::full(4);
  CHECK_THROWS_AS(generate_cube(s.algebra(), {full, full}, tight), SizeError);
}

TEST_CASE("centralizes agrees with the cube-scan oracle everywhere it is feasible") {
  EnumerationTask task;
  task.order = 3;
  std::vector<Semiring> pool = enumerate_semirings(task);
  for (const Semiring& s : pool) {
    CAPTURE(emit_semiring_json(s));
    const Algebra& alg = s.algebra();
    std::vector<Partition> cons = all_congruences(alg);
    for (const Partition& alpha : cons)
      for (const Partition& beta : cons)
        for (const Partition& delta : cons) {
          bool expected = centralizes_oracle(alg, {alpha, beta}, delta);
          CHECK(centralizes(alg, {alpha, beta}, delta) == expected);
        }
  }
}

TEST_CASE("a centralizing counterexample is itself a violating cube") {
  Semiring s = fixture_join_zero();
  Partition full = Partition::full(2);
  Partition id = Partition::identity(2);
  auto witness = centralizes_counterexample(s.algebra(), {full, full}, id);
  REQUIRE(witness.has_value());
  CHECK(witness->dim == 2);
  const std::vector<int>& t = witness->tuple;
  REQUIRE(t.size() == 4);
  int flip = 1 << (witness->dim - 1);
  for (int w = 0; w + 1 < flip; ++w) CHECK(t[w] == t[w | flip]);  // premises hold for identity
  CHECK(witness->conclusion_first() != witness->conclusion_second());
  CHECK(witness->conclusion_first() == t[flip - 1]);
  CHECK(witness->conclusion_second() == t[(flip - 1) | flip]);
  // and no counterexample against the full congruence
  CHECK_FALSE(centralizes_counterexample(s.algebra(), {full, full}, full).has_value());
}

TEST_CASE("binary commutator: both implementations and the lattice-scan least agree") {
  EnumerationTask task;
  task.order = 3;
  std::vector<Semiring> pool = enumerate_semirings(task);
  pool.push_back(fixture_even_mod8());
  for (const Semiring& s : pool) {
    CAPTURE(emit_semiring_json(s));
    const Algebra& alg = s.algebra();
    std::vector<Partition> cons = all_congruences(alg);
    for (const Partition& alpha : cons)
      for (const Partition& beta : cons) {
        Partition via_cube = higher_commutator(alg, {alpha, beta});
        Partition via_quads = binary_commutator_tc(alg, alpha, beta);
        CHECK(via_cube == via_quads);
        CHECK(via_cube == least_centralizing(alg, {alpha, beta}));
        // the commutator sits below both arguments
        CHECK(via_cube.leq(alpha));
        CHECK(via_cube.leq(beta));
      }
  }
}

TEST_CASE("ternary commutators are the lattice-scan least congruence") {
  EnumerationTask task;
  task.order = 2;
  for (const Semiring& s : enumerate_semirings(task)) {
    CAPTURE(emit_semiring_json(s));
    const Algebra& alg = s.algebra();
    std::vector<Partition> cons = all_congruences(alg);
    for (const Partition& a : cons)
      for (const Partition& b : cons)
        for (const Partition& c : cons)
          CHECK(higher_commutator(alg, {a, b, c}) == least_centralizing(alg, {a, b, c}));
  }
  // spot checks at order 3 and 4 with full arguments
  for (Semiring s : {fixture_zero_ring(3), fixture_even_mod8()}) {
    const Algebra& alg = s.algebra();
    Partition full = Partition::full(s.order());
    CHECK(higher_commutator(alg, {full, full, full}) ==
          least_centralizing(alg, {full, full, full}));
  }
}

TEST_CASE("join-zero semiring: the binary commutator of full congruences is full") {
  Semiring s = fixture_join_zero();
  Partition full = Partition::full(2);
  CHECK(higher_commutator(s.algebra(), {full, full}).is_full());
  CHECK(binary_commutator_tc(s.algebra(), full, full).is_full());
}

TEST_CASE("even residues mod 8: commutators collapse along the power chain") {
  Semiring s = fixture_even_mod8();
  Partition full = Partition::full(4);
  Partition mid = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(higher_commutator(s.algebra(), {full, full}) == mid);
  CHECK(higher_commutator(s.algebra(), {full, mid}) == Partition::identity(4));
  CHECK(higher_commutator(s.algebra(), {full, full, full}) == Partition::identity(4));
}

TEST_CASE("commutators of the identity congruence stay identity") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    Partition id = Partition::identity(s.order());
    Partition full = Partition::full(s.order());
    CHECK(higher_commutator(s.algebra(), {full, id}) == id);
    CHECK(higher_commutator(s.algebra(), {id, full}) == id);
  }
}

TEST_CASE("merge steps record genuine violations over the running quotient") {
  Semiring s = fixture_join_zero();
  Partition full = Partition::full(2);
  std::vector<CommutatorStep> steps;
  Partition result = higher_commutator(s.algebra(), {full, full}, {}, &steps);
  CHECK(result.is_full());
  REQUIRE(!steps.empty());
  const CommutatorStep& step = steps.front();
  CHECK(step.reached_before == Partition::identity(2));
  CHECK(step.first != step.second);
  // the recorded cube's conclusion is exactly the merged pair
  CHECK(std::set<int>{step.witness.conclusion_first(), step.witness.conclusion_second()} ==
        std::set<int>{step.first, step.second});
  // a computation that never hits a violation records no steps
  std::vector<CommutatorStep> none;
  Partition again = higher_commutator(s.algebra(), {full, Partition::identity(2)}, {}, &none);
  CHECK(again == Partition::identity(2));
  CHECK(none.empty());
}

TEST_CASE("nilpotent and solvable series on the fixtures") {
  // join-zero: the chain never descends
  Semiring b = fixture_join_zero();
  for (int k = 1; k <= 3; ++k) {
    CHECK(nilpotent_series_term(b.algebra(), k).is_full());
    CHECK(solvable_series_term(b.algebra(), k).is_full());
  }
  CHECK_FALSE(is_n_nilpotent(b.algebra(), 3));
  CHECK_FALSE(is_n_solvable(b.algebra(), 3));

  // zero rings are abelian: already the first term collapses
  Semiring z3 = fixture_zero_ring(3);
  CHECK(nilpotent_series_term(z3.algebra(), 1).is_identity());
  CHECK(is_n_nilpotent(z3.algebra(), 1));
  CHECK(is_n_solvable(z3.algebra(), 1));
  CHECK(is_n_supernilpotent(z3.algebra(), 1));

  // even residues mod 8: nilpotent of degree exactly 2, solvable of degree 2
  Semiring e = fixture_even_mod8();
  CHECK_FALSE(is_n_nilpotent(e.algebra(), 1));
  CHECK(is_n_nilpotent(e.algebra(), 2));
  CHECK_FALSE(is_n_supernilpotent(e.algebra(), 1));
  CHECK(is_n_supernilpotent(e.algebra(), 2));
  CHECK(is_n_solvable(e.algebra(), 2));

  // the two-element field: commutator of full with full is full (it has a
  // multiplicative identity), so no degree works
  Semiring f = fixture_field2();
  CHECK(nilpotent_series_term(f.algebra(), 2).is_full());
  CHECK_FALSE(is_n_nilpotent(f.algebra(), 3));
  CHECK_FALSE(is_n_supernilpotent(f.algebra(), 3));
}

TEST_CASE("series and degree arguments are validated") {
  Semiring s = fixture_boolean();
  CHECK_THROWS_AS(higher_commutator(s.algebra(), {Partition::full(2)}), ArityError);
  CHECK_THROWS_AS(nilpotent_series_term(s.algebra(), 0), DomainError);
  CHECK_THROWS_AS(is_n_nilpotent(s.algebra(), 0), DomainError);
  CHECK_THROWS_AS(is_n_solvable(s.algebra(), -1), DomainError);
  CHECK_THROWS_AS(is_n_supernilpotent(s.algebra(), 0), DomainError);
}

TEST_CASE("order-1 algebras are abelian and all commutators are trivial") {
  Semiring s = make_semiring(1, 0, {{0}}, {{0}});
  Partition id = Partition::identity(1);
  CHECK(higher_commutator(s.algebra(), {id, id}) == id);
  CHECK(is_n_nilpotent(s.algebra(), 1));
  CHECK(is_n_supernilpotent(s.algebra(), 1));
}
