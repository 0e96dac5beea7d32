#include "nilsem/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nilsem {

namespace {

// Shared backtracking state. Tables use -1 for unset cells.
struct Search {
  int n;
  std::vector<int> add, mul;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> found;

  int at(const std::vector<int>& t, int i, int j) const { return t[i * n + j]; }

  // All associativity triples whose three lookups are currently defined.
  bool assoc_consistent(const std::vector<int>& t) const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = at(t, a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n; ++c) {
          int bc = at(t, b, c);
          if (bc < 0) continue;
          int left = at(t, ab, c), right = at(t, a, bc);
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    return true;
  }

  // Both distributive laws on all triples whose lookups are defined
  // (addition is complete by the time multiplication is being filled).
  bool dist_consistent() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int sum = at(add, b, c);
          int l = at(mul, a, sum), lb = at(mul, a, b), lc = at(mul, a, c);
          if (l >= 0 && lb >= 0 && lc >= 0 && l != at(add, lb, lc)) return false;
          int r = at(mul, sum, a), rb = at(mul, b, a), rc = at(mul, c, a);
          if (r >= 0 && rb >= 0 && rc >= 0 && r != at(add, rb, rc)) return false;
        }
    return true;
  }

  void fill_mul(int i, int j) {
    if (i == n) {
      found.emplace_back(add, mul);
      return;
    }
    int ni = j + 1 == n ? i + 1 : i, nj = j + 1 == n ? 1 : j + 1;
    for (int v = 0; v < n; ++v) {
      mul[i * n + j] = v;
      if (assoc_consistent(mul) && dist_consistent()) fill_mul(ni, nj);
    }
    mul[i * n + j] = -1;
  }

  void fill_add(int i, int j) {
    if (i == n) {
      std::fill(mul.begin(), mul.end(), -1);
      for (int k = 0; k < n; ++k) mul[k * n] = mul[k] = 0;
      if (n == 1)
        found.emplace_back(add, mul);
      else
        fill_mul(1, 1);
      return;
    }
    int ni = j + 1 == n ? i + 1 : i, nj = j + 1 == n ? ni : j + 1;
    for (int v = 0; v < n; ++v) {
      add[i * n + j] = add[j * n + i] = v;
      if (assoc_consistent(add)) fill_add(ni, nj);
    }
    add[i * n + j] = add[j * n + i] = -1;
  }

  void run() {
    add.assign(n * n, -1);
    mul.assign(n * n, -1);
    for (int k = 0; k < n; ++k) add[k * n] = add[k] = k;
    fill_add(1, 1);
  }
};

std::vector<int> apply_permutation(const std::vector<int>& table, const std::vector<int>& p,
                                   const std::vector<int>& pinv, int n) {
  std::vector<int> out(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[x * n + y] = p[table[pinv[x] * n + pinv[y]]];
  return out;
}

}  // namespace

std::vector<int> canonical_encoding(const Semiring& s) {
  const int n = s.order();
  // Work with 0 as the zero: conjugate by the transposition (0 zero) first
  // so "fixing the zero" is "fixing 0" for every input.
  std::vector<int> base_p(n);
  std::iota(base_p.begin(), base_p.end(), 0);
  std::swap(base_p[0], base_p[s.zero()]);
  std::vector<int> add0 = apply_permutation(s.add_table(), base_p, base_p, n);
  std::vector<int> mul0 = apply_permutation(s.mul_table(), base_p, base_p, n);

  std::vector<int> rest(std::max(0, n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> best;
  do {
    std::vector<int> p(n), pinv(n);
    p[0] = 0;
    for (int k = 1; k < n; ++k) p[k] = rest[k - 1];
    for (int k = 0; k < n; ++k) pinv[p[k]] = k;
    std::vector<int> enc = apply_permutation(add0, p, pinv, n);
    std::vector<int> menc = apply_permutation(mul0, p, pinv, n);
    enc.insert(enc.end(), menc.begin(), menc.end());
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

bool are_isomorphic(const Semiring& a, const Semiring& b) {
  return a.order() == b.order() && canonical_encoding(a) == canonical_encoding(b);
}

std::vector<Semiring> enumerate_semirings(const EnumerationTask& task, const Limits& limits) {
  if (task.order < 1) throw DomainError("enumeration order must be at least 1");
  if (task.order > limits.enumeration_order_bound)
    throw SizeError("enumeration order " + std::to_string(task.order) +
                    " exceeds the enumeration bound " +
                    std::to_string(limits.enumeration_order_bound));
  Search search;
  search.n = task.order;
  search.run();

  auto build = [&](const std::vector<int>& add, const std::vector<int>& mul) {
    auto checked = validate_semiring(semiring_algebra(task.order, 0, add, mul), 0, limits);
    if (std::holds_alternative<AxiomViolation>(checked))
      throw InternalError("enumeration produced tables violating " +
                          std::get<AxiomViolation>(checked).axiom);
    return std::get<Semiring>(checked);
  };
  auto keep = [&](const Semiring& s) {
    if (task.cancellative_only && !is_additively_cancellative(s)) return false;
    if (task.with_identity_only && multiplicative_identity(s) < 0) return false;
    return true;
  };

  std::vector<Semiring> out;
  if (!task.up_to_iso) {
    for (const auto& [add, mul] : search.found) {
      Semiring s = build(add, mul);
      if (keep(s)) out.push_back(std::move(s));
    }
    return out;
  }
  std::map<std::vector<int>, bool> classes;
  for (const auto& [add, mul] : search.found) {
    Semiring s = build(add, mul);
    if (keep(s)) classes.emplace(canonical_encoding(s), true);
  }
  for (const auto& [enc, unused] : classes) {
    (void)unused;
    std::vector<int> add(enc.begin(), enc.begin() + task.order * task.order);
    std::vector<int> mul(enc.begin() + task.order * task.order, enc.end());
    out.push_back(build(add, mul));
  }
  return out;
}

}  // namespace nilsem
