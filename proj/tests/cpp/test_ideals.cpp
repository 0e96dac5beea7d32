#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "nilsem/algebra.hpp"
#include "nilsem/congruence.hpp"
#include "nilsem/enumerate.hpp"
#include "nilsem/errors.hpp"
#include "nilsem/fixtures.hpp"
#include "nilsem/ideals.hpp"
#include "nilsem/io.hpp"
#include "nilsem/partition.hpp"

using namespace nilsem;

namespace {

// Ideal membership straight from the definition: nonempty, closed under
// addition, and closed under multiplication by arbitrary elements on both
// sides.
bool ideal_oracle(const Semiring& s, const std::set<int>& subset) {
  if (subset.empty()) return false;
  for (int a : subset) {
    for (int b : subset)
      if (!subset.count(s.add(a, b))) return false;
    for (int x = 0; x < s.order(); ++x)
      if (!subset.count(s.mul(a, x)) || !subset.count(s.mul(x, a))) return false;
  }
  return true;
}

std::vector<std::set<int>> all_ideals_oracle(const Semiring& s) {
  std::vector<std::set<int>> out;
  int n = s.order();
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::set<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) subset.insert(i);
    if (ideal_oracle(s, subset)) out.push_back(subset);
  }
  return out;
}

std::set<int> as_set(const Ideal& ideal) { return {ideal.elems.begin(), ideal.elems.end()}; }

// Pairwise products of two element sets, then the least ideal around them.
Ideal product_oracle(const Semiring& s, const Ideal& a, const Ideal& b) {
  std::vector<int> prods;
  for (int x : a.elems)
    for (int y : b.elems) prods.push_back(s.mul(x, y));
  return ideal_closure(s, prods);
}

// The sum of two ideals: all element sums (already an ideal by
// distributivity, but run it through the closure anyway).
Ideal sum_oracle(const Semiring& s, const Ideal& a, const Ideal& b) {
  std::vector<int> sums;
  for (int x : a.elems)
    for (int y : b.elems) sums.push_back(s.add(x, y));
  return ideal_closure(s, sums);
}

}  // namespace

TEST_CASE("is_ideal agrees with the definition on every subset of every fixture") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    int n = s.order();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) subset.push_back(i);
      std::set<int> as_std_set(subset.begin(), subset.end());
      CHECK(is_ideal(s, subset) == ideal_oracle(s, as_std_set));
    }
  }
}

TEST_CASE("all_ideals matches the full subset scan on fixtures and order-3 semirings") {
  auto check_one = [](const Semiring& s) {
    std::vector<std::set<int>> expected = all_ideals_oracle(s);
    std::vector<std::set<int>> got;
    for (const Ideal& ideal : all_ideals(s)) got.push_back(as_set(ideal));
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  };
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    check_one(s);
  }
  EnumerationTask task;
  task.order = 3;
  for (const Semiring& s : enumerate_semirings(task)) {
    CAPTURE(emit_semiring_json(s));
    check_one(s);
  }
}

TEST_CASE("ideal_closure returns the least ideal containing the seed") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    std::vector<std::set<int>> ideals = all_ideals_oracle(s);
    for (int x = 0; x < s.order(); ++x) {
      Ideal closed = ideal_closure(s, {x});
      CHECK(ideal_oracle(s, as_set(closed)));
      CHECK(as_set(closed).count(x) == 1);
      for (const std::set<int>& ideal : ideals)
        if (ideal.count(x)) {
          const std::set<int>& got = as_set(closed);
          CHECK(std::includes(ideal.begin(), ideal.end(), got.begin(), got.end()));
        }
    }
  }
}

TEST_CASE("the zero ideal and the full ideal always exist") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    std::vector<Ideal> ideals = all_ideals(s);
    Ideal zero{{s.zero()}};
    Ideal full;
    for (int i = 0; i < s.order(); ++i) full.elems.push_back(i);
    CHECK(std::find(ideals.begin(), ideals.end(), zero) != ideals.end());
    CHECK(std::find(ideals.begin(), ideals.end(), full) != ideals.end());
  }
}

TEST_CASE("ideal_product matches products-then-closure and is n-ary consistent") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    std::vector<Ideal> ideals = all_ideals(s);
    for (const Ideal& a : ideals)
      for (const Ideal& b : ideals) {
        Ideal got = ideal_product(s, {a, b});
        CHECK(got == product_oracle(s, a, b));
        for (const Ideal& c : ideals) {
          Ideal ternary = ideal_product(s, {a, b, c});
          Ideal iterated = ideal_product(s, {ideal_product(s, {a, b}), c});
          CHECK(ternary == iterated);
        }
      }
  }
}

TEST_CASE("powers of the carrier form a descending stabilizing chain") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    Ideal prev = power_of_s(s, 1);
    CHECK(static_cast<int>(prev.elems.size()) == s.order());
    for (int k = 2; k <= s.order() + 2; ++k) {
      Ideal cur = power_of_s(s, k);
      const auto prev_set = as_set(prev);
      const auto cur_set = as_set(cur);
      CHECK(std::includes(prev_set.begin(), prev_set.end(), cur_set.begin(), cur_set.end()));
      prev = cur;
    }
    // once two consecutive powers agree the chain is constant
    int stable = 1;
    while (stable <= s.order() && !(power_of_s(s, stable) == power_of_s(s, stable + 1)))
      ++stable;
    CHECK(power_of_s(s, stable) == power_of_s(s, stable + 3));
  }
}

TEST_CASE("even residues mod 8: the power chain is S, {0,4}, {0}") {
  Semiring s = fixture_even_mod8();  // index i stands for the residue 2i
  CHECK(power_of_s(s, 1).elems == std::vector<int>{0, 1, 2, 3});
  CHECK(power_of_s(s, 2).elems == std::vector<int>{0, 2});  // {0, 4} as residues
  CHECK(power_of_s(s, 3).elems == std::vector<int>{0});
  CHECK(power_of_s(s, 4).elems == std::vector<int>{0});
}

TEST_CASE("ideal_commutator is the sum of both product orders") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    std::vector<Ideal> ideals = all_ideals(s);
    for (const Ideal& a : ideals)
      for (const Ideal& b : ideals) {
        Ideal expected =
            sum_oracle(s, product_oracle(s, a, b), product_oracle(s, b, a));
        CHECK(ideal_commutator(s, {a, b}) == expected);
      }
  }
}

TEST_CASE("ternary ideal_commutator sums all six permuted products") {
  Semiring s = fixture_even_mod8();
  std::vector<Ideal> ideals = all_ideals(s);
  for (const Ideal& a : ideals)
    for (const Ideal& b : ideals)
      for (const Ideal& c : ideals) {
        std::vector<const Ideal*> f = {&a, &b, &c};
        std::vector<int> perm = {0, 1, 2};
        Ideal expected{{s.zero()}};
        do {
          Ideal prod = ideal_product(s, {*f[perm[0]], *f[perm[1]], *f[perm[2]]});
          expected = sum_oracle(s, expected, prod);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(ideal_commutator(s, {a, b, c}) == expected);
      }
}

TEST_CASE("rho is the least congruence collapsing the ideal to zero") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    std::vector<Partition> cons = all_congruences(s.algebra());
    for (const Ideal& ideal : all_ideals(s)) {
      Partition rho = rho_of_ideal(s, ideal);
      CHECK(is_congruence(s.algebra(), rho));
      for (int i : ideal.elems) CHECK(rho.same(i, s.zero()));
      for (const Partition& c : cons) {
        bool collapses = true;
        for (int i : ideal.elems) collapses = collapses && c.same(i, s.zero());
        if (collapses) CHECK(rho.leq(c));
      }
    }
  }
}

TEST_CASE("rho of the trivial and full ideals") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    Ideal zero{{s.zero()}};
    CHECK(rho_of_ideal(s, zero) == Partition::identity(s.order()));
    Ideal full;
    for (int i = 0; i < s.order(); ++i) full.elems.push_back(i);
    CHECK(rho_of_ideal(s, full) == Partition::full(s.order()));
  }
}

TEST_CASE("the join-zero semiring separates rho of the square from the binary commutator") {
  Semiring s = fixture_join_zero();
  Ideal square = power_of_s(s, 2);
  CHECK(square.elems == std::vector<int>{0});
  CHECK(rho_of_ideal(s, square) == Partition::identity(2));
}

TEST_CASE("ideal inputs are validated") {
  Semiring s = fixture_boolean();
  CHECK_THROWS_AS(ideal_closure(s, {5}), DomainError);
  CHECK_THROWS_AS(power_of_s(s, 0), DomainError);
  CHECK_THROWS_AS(ideal_commutator(s, {}), DomainError);
  // rho demands an actual ideal, not a bare subset
  CHECK_THROWS_AS(rho_of_ideal(s, Ideal{{1}}), DomainError);
}
