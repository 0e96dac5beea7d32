#include "nilsem/property.hpp"

#include <random>
#include <sstream>

#include "nilsem/enumerate.hpp"
#include "nilsem/fixtures.hpp"
#include "nilsem/terms.hpp"

namespace nilsem {

ParityPropertyResult run_parity_property(std::uint64_t seed, int samples, const Limits& limits) {
  if (samples < 0) throw DomainError("sample count must be nonnegative");
  ParityPropertyResult result;
  result.seed = seed;
  result.samples = samples;

  // Fixed pool: all semirings of orders 2 and 3 up to isomorphism plus two
  // order-4 members, so the property is exercised across the whole desk-
  // scale landscape.
  std::vector<Semiring> pool;
  for (int order = 2; order <= 3; ++order) {
    EnumerationTask task;
    task.order = order;
    for (Semiring& s : enumerate_semirings(task, limits)) pool.push_back(std::move(s));
  }
  pool.push_back(fixture_even_mod8());
  pool.push_back(fixture_zero_ring(4));

  std::mt19937_64 rng(seed);
  auto pick = [&rng](int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
  };

  for (int i = 0; i < samples; ++i) {
    const Semiring& s = pool[pick(static_cast<int>(pool.size()))];
    int n = 2 + pick(2);        // groups
    int k = 1 + pick(n - 1);    // touched groups, 1 <= k < n
    std::vector<int> arity(n);
    for (int g = 0; g < n; ++g) arity[g] = 1 + pick(2);

    // Choose which k groups the monomial touches.
    std::vector<int> touched;
    for (int g = 0; g < n; ++g) touched.push_back(g);
    for (int g = n - 1; g > 0; --g) std::swap(touched[g], touched[pick(g + 1)]);
    touched.resize(k);

    // One factor from every touched group, then extra random factors
    // (variables from touched groups or constants).
    std::vector<TermPtr> factors;
    for (int g : touched) factors.push_back(Term::var(g, pick(arity[g])));
    int extra = pick(3);
    for (int e = 0; e < extra; ++e) {
      if (pick(3) == 0)
        factors.push_back(Term::constant(pick(s.order())));
      else {
        int g = touched[pick(k)];
        factors.push_back(Term::var(g, pick(arity[g])));
      }
    }
    for (int g = static_cast<int>(factors.size()) - 1; g > 0; --g)
      std::swap(factors[g], factors[pick(g + 1)]);
    TermPtr monomial = factors.size() == 1 ? factors[0] : Term::product(std::move(factors));

    GroupBindings bindings;
    bindings.a.resize(n);
    bindings.b.resize(n);
    for (int g = 0; g < n; ++g) {
      for (int c = 0; c < arity[g]; ++c) {
        bindings.a[g].push_back(pick(s.order()));
        bindings.b[g].push_back(pick(s.order()));
      }
    }

    auto [even, odd] = parity_sums(monomial, bindings, s);
    if (even != odd) {
      ++result.failures;
      if (result.first_failure.empty()) {
        std::ostringstream msg;
        msg << "sample " << i << ": monomial " << monomial->to_string() << " over order "
            << s.order() << " semiring gives even sum " << even << " and odd sum " << odd;
        result.first_failure = msg.str();
      }
    }
  }
  return result;
}

}  // namespace nilsem
