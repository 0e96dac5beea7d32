#include "nilsem/congruence.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace nilsem {

Partition congruence_generated_by(const Algebra& alg,
                                  const std::vector<std::pair<int, int>>& pairs,
                                  const Limits& limits) {
  const int n = alg.order;
  if (n > limits.max_order) throw SizeError("order exceeds the congruence-generation bound");
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw DomainError("generator pair out of range");
    if (uf.unite(a, b)) work.emplace_back(a, b);
  }
  // Whenever two elements become related, their images under every unary
  // translation of a basic operation must be related too; transitivity is
  // handled by the union-find, so processing merge events suffices.
  std::vector<int> args;
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (const Operation& op : alg.ops) {
      if (op.arity == 0) continue;
      args.assign(op.arity, 0);
      while (true) {
        for (int pos = 0; pos < op.arity; ++pos) {
          int saved = args[pos];
          args[pos] = a;
          int fa = op.apply(args, n);
          args[pos] = b;
          int fb = op.apply(args, n);
          args[pos] = saved;
          if (uf.unite(fa, fb)) work.emplace_back(fa, fb);
        }
        // Advance the constant tuple; the translated position ranges over
        // all slots anyway, so iterating full tuples covers every choice.
        int pos = op.arity - 1;
        while (pos >= 0 && args[pos] == n - 1) args[pos--] = 0;
        if (pos < 0) break;
        ++args[pos];
      }
    }
  }
  return uf.to_partition();
}

std::vector<Partition> all_congruences(const Algebra& alg, const Limits& limits) {
  const int n = alg.order;
  if (n > limits.lattice_order_bound)
    throw SizeError("order " + std::to_string(n) + " exceeds the congruence-lattice bound " +
                    std::to_string(limits.lattice_order_bound));

  std::unordered_set<Partition, PartitionHash> seen;
  std::vector<Partition> items;
  auto insert = [&](const Partition& p) {
    if (seen.insert(p).second) items.push_back(p);
  };
  insert(Partition::identity(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) insert(congruence_generated_by(alg, {{a, b}}, limits));

  // Every congruence is a join of principal ones, so closing under binary
  // joins reaches the whole lattice.
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) insert(join(items[i], items[j]));

  std::sort(items.begin(), items.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a.labels() < b.labels();
  });
  return items;
}

}  // namespace nilsem
