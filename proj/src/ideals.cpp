#include "nilsem/ideals.hpp"

#include <algorithm>
#include <set>

#include "nilsem/congruence.hpp"

namespace nilsem {

namespace {

// Subsets travel as bitmasks internally (order <= 16).
Ideal from_mask(unsigned mask) {
  Ideal out;
  for (int x = 0; mask >> x; ++x)
    if (mask >> x & 1u) out.elems.push_back(x);
  return out;
}

unsigned to_mask(const std::vector<int>& elems, int order) {
  unsigned m = 0;
  for (int x : elems) {
    if (x < 0 || x >= order) throw DomainError("ideal element out of range");
    m |= 1u << x;
  }
  return m;
}

unsigned closure_mask(const Semiring& s, unsigned seed) {
  const int n = s.order();
  unsigned m = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    unsigned next = m;
    for (int a = 0; a < n; ++a) {
      if (!(m >> a & 1u)) continue;
      for (int b = 0; b < n; ++b) {
        if (m >> b & 1u) next |= 1u << s.add(a, b);
        next |= 1u << s.mul(a, b);
        next |= 1u << s.mul(b, a);
      }
    }
    if (next != m) {
      m = next;
      grew = true;
    }
  }
  return m;
}

bool is_ideal_mask(const Semiring& s, unsigned m) {
  if (m == 0) return false;
  return closure_mask(s, m) == m;
}

// Closure of a set of products under addition, as a mask.
unsigned sum_closure(const Semiring& s, unsigned seed) {
  unsigned m = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    unsigned next = m;
    for (int a = 0; m >> a; ++a)
      if (m >> a & 1u)
        for (int b = a; m >> b; ++b)
          if (m >> b & 1u) next |= 1u << s.add(a, b);
    if (next != m) {
      m = next;
      grew = true;
    }
  }
  return m;
}

}  // namespace

bool Ideal::contains(int x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

std::string Ideal::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elems[i]);
  }
  return out + "}";
}

bool is_ideal(const Semiring& s, const std::vector<int>& subset) {
  return is_ideal_mask(s, to_mask(subset, s.order()));
}

Ideal ideal_closure(const Semiring& s, const std::vector<int>& seed) {
  if (seed.empty()) throw DomainError("ideal seed must be nonempty");
  return from_mask(closure_mask(s, to_mask(seed, s.order())));
}

std::vector<Ideal> all_ideals(const Semiring& s) {
  const int n = s.order();
  std::set<unsigned> masks;
  if (n <= 6) {
    for (unsigned m = 1; m < (1u << n); ++m)
      if (is_ideal_mask(s, m)) masks.insert(m);
  } else {
    // Ideals are intersections-closed and every ideal is the join (closure
    // of the union) of the principal ideals of its elements, so closing the
    // principal ideals under pairwise join reaches all of them.
    std::vector<unsigned> items;
    for (int x = 0; x < n; ++x) {
      unsigned p = closure_mask(s, 1u << x);
      if (masks.insert(p).second) items.push_back(p);
    }
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        unsigned u = closure_mask(s, items[i] | items[j]);
        if (masks.insert(u).second) items.push_back(u);
      }
  }
  std::vector<Ideal> out;
  for (unsigned m : masks) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

Ideal ideal_product(const Semiring& s, const std::vector<Ideal>& factors) {
  if (factors.empty()) throw DomainError("ideal product needs at least one factor");
  // Set of all products a_1 * ... * a_k, folded left to right (the
  // multiplication is associative, so the bracketing does not matter).
  unsigned cur = to_mask(factors[0].elems, s.order());
  for (std::size_t j = 1; j < factors.size(); ++j) {
    unsigned next = 0;
    for (int a = 0; cur >> a; ++a)
      if (cur >> a & 1u)
        for (int b : factors[j].elems) next |= 1u << s.mul(a, b);
    cur = next;
  }
  Ideal out = from_mask(sum_closure(s, cur));
  if (!is_ideal(s, out.elems))
    throw InternalError("ideal product failed to close into an ideal");
  return out;
}

Ideal power_of_s(const Semiring& s, int n) {
  if (n < 1) throw DomainError("power exponent must be at least 1");
  std::vector<int> all(s.order());
  for (int i = 0; i < s.order(); ++i) all[i] = i;
  std::vector<Ideal> factors(n, Ideal{all});
  return ideal_product(s, factors);
}

Ideal ideal_commutator(const Semiring& s, const std::vector<Ideal>& factors) {
  if (factors.empty()) throw DomainError("ideal commutator needs at least one factor");
  std::vector<std::size_t> perm(factors.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  unsigned acc = 0;
  do {
    std::vector<Ideal> arranged;
    for (std::size_t i : perm) arranged.push_back(factors[i]);
    acc |= to_mask(ideal_product(s, arranged).elems, s.order());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return from_mask(sum_closure(s, acc));
}

Partition rho_of_ideal(const Semiring& s, const Ideal& ideal) {
  const int n = s.order();
  if (!is_ideal(s, ideal.elems)) throw DomainError("rho requested for a non-ideal subset");

  // Route one: the explicit description a ~ b iff a + i = b + j with i, j
  // in the ideal. This relation is already transitive, but a union-find
  // canonicalizes it for free.
  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool related = false;
      for (int i : ideal.elems) {
        for (int j : ideal.elems)
          if (s.add(a, i) == s.add(b, j)) {
            related = true;
            break;
          }
        if (related) break;
      }
      if (related) uf.unite(a, b);
    }
  Partition direct = uf.to_partition();

  // Route two: the least congruence collapsing the ideal into the class of
  // zero. The two must coincide; anything else is a hard bug.
  std::vector<std::pair<int, int>> pairs;
  for (int i : ideal.elems) pairs.emplace_back(i, s.zero());
  Partition generated = congruence_generated_by(s.algebra(), pairs);
  if (direct != generated)
    throw InternalError("ideal congruence mismatch: direct description " + direct.to_string() +
                        " vs generated congruence " + generated.to_string());
  return direct;
}

}  // namespace nilsem
