#include "nilsem/commutator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

#include "nilsem/congruence.hpp"

namespace nilsem {

namespace {

// Cube tuples are packed into one machine word, `bits` bits per coordinate.
// The internal coordinate order puts the LAST dimension in bit 0 and
// dimension i < dim-1 in bit i+1, so the value pairs across the last
// dimension sit in adjacent slots (2w, 2w+1): a single xor-and-shift then
// tests all premise pairs for equality at once. The all-b premise slot pair
// is (coords-2, coords-1).
struct Packing {
  int dim = 0, order = 0, bits = 0, coords = 0;
  uint64_t slot_mask = 0;     // low `bits` ones
  uint64_t premise_mask = 0;  // slot at every even coordinate except coords-2
  uint64_t top_mask = 0;      // slot at coordinate coords-2
};

Packing make_packing(int dim, int order, const Limits& limits) {
  if (dim < 1) throw ArityError("cube dimension must be at least 1");
  if (dim > limits.dim_budget)
    throw SizeError("cube dimension " + std::to_string(dim) + " exceeds the dimension budget " +
                    std::to_string(limits.dim_budget));
  Packing pk;
  pk.dim = dim;
  pk.order = order;
  pk.bits = order <= 2 ? 1 : std::bit_width(static_cast<unsigned>(order - 1));
  pk.coords = 1 << dim;
  if (pk.coords * pk.bits > 64)
    throw SizeError("cube of dimension " + std::to_string(dim) + " over order " +
                    std::to_string(order) + " does not fit a packed word");
  pk.slot_mask = (1ull << pk.bits) - 1;
  for (int c = 0; c < pk.coords; c += 2) pk.premise_mask |= pk.slot_mask << (c * pk.bits);
  pk.top_mask = pk.slot_mask << ((pk.coords - 2) * pk.bits);
  pk.premise_mask &= ~pk.top_mask;
  return pk;
}

int slot_value(const Packing& pk, uint64_t t, int c) {
  return static_cast<int>((t >> (c * pk.bits)) & pk.slot_mask);
}

uint64_t diagonal_tuple(const Packing& pk, int s) {
  uint64_t t = 0;
  for (int c = 0; c < pk.coords; ++c) t |= static_cast<uint64_t>(s) << (c * pk.bits);
  return t;
}

uint64_t indicator_tuple(const Packing& pk, int dim_index, int a, int b) {
  int pos = dim_index == pk.dim - 1 ? 0 : dim_index + 1;
  uint64_t t = 0;
  for (int c = 0; c < pk.coords; ++c)
    t |= static_cast<uint64_t>((c >> pos & 1) ? b : a) << (c * pk.bits);
  return t;
}

// Decode into the public coordinate order (bit i of the valuation index is
// the choice of dimension i).
std::vector<int> decode_tuple(const Packing& pk, uint64_t t) {
  std::vector<int> out(pk.coords);
  for (int w = 0; w < pk.coords; ++w) {
    int c = ((w & ((1 << (pk.dim - 1)) - 1)) << 1) | (w >> (pk.dim - 1) & 1);
    out[w] = slot_value(pk, t, c);
  }
  return out;
}

// Open-addressing set of packed tuples; ~16 bytes per element, no rehash of
// payloads. The all-ones key doubles as the empty slot marker and is tracked
// separately.
class PackedSet {
 public:
  PackedSet() : slots_(1024, kEmpty), mask_(1023) {}

  bool insert(uint64_t key) {
    if (key == kEmpty) {
      if (has_empty_) return false;
      has_empty_ = true;
      return true;
    }
    if ((size_ + 1) * 10 >= slots_.size() * 7) grow();
    std::size_t i = mix(key) & mask_;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = key;
    ++size_;
    return true;
  }

 private:
  static constexpr uint64_t kEmpty = ~0ull;
  static uint64_t mix(uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ull;
    x ^= x >> 33;
    return x;
  }
  void grow() {
    std::vector<uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    for (uint64_t k : old)
      if (k != kEmpty) {
        std::size_t i = mix(k) & mask_;
        while (slots_[i] != kEmpty) i = (i + 1) & mask_;
        slots_[i] = k;
      }
  }

  std::vector<uint64_t> slots_;
  std::size_t mask_;
  std::size_t size_ = 0;
  bool has_empty_ = false;
};

struct ClosureOutcome {
  bool complete = false;
  bool budget_exceeded = false;
  std::optional<std::pair<int, int>> violation;  // conclusion values (base elements)
  uint64_t violating_tuple = 0;
};

// Closes the generators under all operations, applied slot-wise. When
// stop_on_violation is set, every fresh tuple is tested for "premise pairs
// all equal, conclusion pair unequal" and the closure stops at the first hit.
ClosureOutcome close_cube(const Algebra& alg, const Packing& pk,
                          const std::vector<std::vector<std::pair<int, int>>>& dim_pairs,
                          bool stop_on_violation, const Limits& limits,
                          std::vector<uint64_t>& tuples) {
  ClosureOutcome out;
  PackedSet seen;
  std::size_t work = 0;

  // 0 = already known, 1 = new, 2 = stop the closure.
  auto insert = [&](uint64_t t) -> int {
    if (!seen.insert(t)) return 0;
    tuples.push_back(t);
    if (tuples.size() > limits.tuple_budget) {
      out.budget_exceeded = true;
      return 2;
    }
    if (stop_on_violation) {
      uint64_t diff = t ^ (t >> pk.bits);
      if ((diff & pk.premise_mask) == 0 && (diff & pk.top_mask) != 0) {
        out.violation = {slot_value(pk, t, pk.coords - 2), slot_value(pk, t, pk.coords - 1)};
        out.violating_tuple = t;
        return 2;
      }
    }
    return 1;
  };

  for (int s = 0; s < pk.order; ++s)
    if (insert(diagonal_tuple(pk, s)) == 2) return out;
  for (int i = 0; i < pk.dim; ++i)
    for (auto [a, b] : dim_pairs[i])
      if (insert(indicator_tuple(pk, i, a, b)) == 2) return out;

  std::size_t lo = 0;
  while (lo < tuples.size()) {
    std::size_t hi = tuples.size();
    for (const Operation& op : alg.ops) {
      if (op.arity == 0) continue;
      if (op.arity == 2) {
        const int* table = op.table.data();
        for (std::size_t i = 0; i < hi; ++i) {
          uint64_t x = tuples[i];
          for (std::size_t j = (i < lo ? lo : 0); j < hi; ++j) {
            uint64_t y = tuples[j], r = 0;
            for (int c = 0; c < pk.coords; ++c) {
              int av = static_cast<int>(x >> (c * pk.bits) & pk.slot_mask);
              int bv = static_cast<int>(y >> (c * pk.bits) & pk.slot_mask);
              r |= static_cast<uint64_t>(table[av * pk.order + bv]) << (c * pk.bits);
            }
            if (++work > limits.work_budget) {
              out.budget_exceeded = true;
              return out;
            }
            if (insert(r) == 2) return out;
          }
        }
      } else if (op.arity == 1) {
        for (std::size_t i = lo; i < hi; ++i) {
          uint64_t x = tuples[i], r = 0;
          for (int c = 0; c < pk.coords; ++c)
            r |= static_cast<uint64_t>(op.table[x >> (c * pk.bits) & pk.slot_mask])
                 << (c * pk.bits);
          if (++work > limits.work_budget) {
            out.budget_exceeded = true;
            return out;
          }
          if (insert(r) == 2) return out;
        }
      } else {
        // Rare general case: all argument index tuples with at least one
        // index in the current frontier.
        std::vector<std::size_t> idx(op.arity, 0);
        std::vector<int> vals(op.arity);
        while (true) {
          bool touches_new = false;
          for (std::size_t k : idx) touches_new = touches_new || k >= lo;
          if (touches_new) {
            uint64_t r = 0;
            for (int c = 0; c < pk.coords; ++c) {
              for (int k = 0; k < op.arity; ++k)
                vals[k] = static_cast<int>(tuples[idx[k]] >> (c * pk.bits) & pk.slot_mask);
              r |= static_cast<uint64_t>(op.apply(vals, pk.order)) << (c * pk.bits);
            }
            if (++work > limits.work_budget) {
              out.budget_exceeded = true;
              return out;
            }
            if (insert(r) == 2) return out;
          }
          int k = op.arity - 1;
          while (k >= 0 && idx[k] + 1 == hi) idx[k--] = 0;
          if (k < 0) break;
          ++idx[k];
        }
      }
    }
    lo = hi;
  }
  out.complete = true;
  return out;
}

std::vector<std::vector<std::pair<int, int>>> pairs_of_partitions(
    const std::vector<Partition>& args) {
  std::vector<std::vector<std::pair<int, int>>> dim_pairs(args.size());
  for (std::size_t i = 0; i < args.size(); ++i)
    for (int x = 0; x < args[i].order(); ++x)
      for (int y = x + 1; y < args[i].order(); ++y)
        if (args[i].same(x, y)) {
          dim_pairs[i].emplace_back(x, y);
          dim_pairs[i].emplace_back(y, x);
        }
  return dim_pairs;
}

void check_args(const Algebra& a, const std::vector<Partition>& args) {
  for (const Partition& p : args) {
    if (p.order() != a.order) throw DomainError("argument partition does not match the algebra");
    if (!is_congruence(a, p)) throw DomainError("commutator argument is not a congruence");
  }
}

}  // namespace

CubeAlgebra generate_cube(const Algebra& a, const std::vector<Partition>& args,
                          const Limits& limits) {
  a.check(limits);
  check_args(a, args);
  if (args.empty()) throw ArityError("cube needs at least one dimension");
  Packing pk = make_packing(static_cast<int>(args.size()), a.order, limits);
  std::vector<uint64_t> packed;
  ClosureOutcome out =
      close_cube(a, pk, pairs_of_partitions(args), /*stop_on_violation=*/false, limits, packed);
  if (!out.complete)
    throw SizeError("cube closure exceeded its tuple or work budget");
  CubeAlgebra cube;
  cube.dim = pk.dim;
  cube.base_order = a.order;
  for (uint64_t t : packed) cube.tuples.push_back(decode_tuple(pk, t));
  std::sort(cube.tuples.begin(), cube.tuples.end());
  return cube;
}

std::optional<CounterexampleCube> centralizes_counterexample(const Algebra& a,
                                                             const std::vector<Partition>& args,
                                                             const Partition& delta,
                                                             const Limits& limits) {
  if (args.size() < 2)
    throw ArityError("the centralizing condition needs at least two arguments");
  if (delta.order() != a.order || !is_congruence(a, delta))
    throw DomainError("delta is not a congruence of the algebra");
  CubeAlgebra cube = generate_cube(a, args, limits);
  const int k = cube.dim - 1;  // dimensions feeding the premises
  const int flip = 1 << k;     // toggles the last dimension
  for (const auto& t : cube.tuples) {
    bool premises_hold = true;
    for (int w = 0; w < flip - 1 && premises_hold; ++w)
      premises_hold = delta.same(t[w], t[w | flip]);
    if (premises_hold && !delta.same(t[flip - 1], t[(flip - 1) | flip]))
      return CounterexampleCube{cube.dim, t};
  }
  return std::nullopt;
}

bool centralizes(const Algebra& a, const std::vector<Partition>& args, const Partition& delta,
                 const Limits& limits) {
  return !centralizes_counterexample(a, args, delta, limits).has_value();
}

Partition higher_commutator(const Algebra& a, const std::vector<Partition>& args,
                            const Limits& limits, std::vector<CommutatorStep>* steps) {
  a.check(limits);
  if (args.size() < 2) throw ArityError("higher commutator needs at least two arguments");
  check_args(a, args);
  const int n = static_cast<int>(args.size());
  Partition delta = Partition::identity(a.order);
  if (a.order == 1) return delta;

  // Grow delta until the centralizing condition holds. A cube has its
  // premises inside delta exactly when its image in A/delta has equal
  // premise pairs, and cubes of the quotient are exactly the images of
  // cubes of A, so each round searches the quotient cube for a violation
  // with plain equality tests. Every merged pair is forced into any
  // congruence satisfying the condition, and the final round certifies it.
  while (true) {
    QuotientAlgebra q = quotient_algebra(a, delta);
    Packing pk = make_packing(n, q.alg.order, limits);
    std::vector<std::vector<std::pair<int, int>>> dim_pairs(n);
    for (int i = 0; i < n; ++i) {
      std::set<std::pair<int, int>> uniq;
      for (int x = 0; x < a.order; ++x)
        for (int y = x + 1; y < a.order; ++y)
          if (args[i].same(x, y) && q.cls[x] != q.cls[y])
            uniq.insert({std::min(q.cls[x], q.cls[y]), std::max(q.cls[x], q.cls[y])});
      for (auto [u, v] : uniq) {
        dim_pairs[i].emplace_back(u, v);
        dim_pairs[i].emplace_back(v, u);
      }
    }
    std::vector<uint64_t> tuples;
    ClosureOutcome out =
        close_cube(q.alg, pk, dim_pairs, /*stop_on_violation=*/true, limits, tuples);
    if (out.violation) {
      auto [u, v] = *out.violation;
      int ru = q.rep[u], rv = q.rep[v];
      if (steps) {
        std::vector<int> witness = decode_tuple(pk, out.violating_tuple);
        for (int& e : witness) e = q.rep[e];
        steps->push_back(CommutatorStep{ru, rv, delta, CounterexampleCube{n, witness}});
      }
      std::vector<std::pair<int, int>> pairs;
      for (int x = 0; x < a.order; ++x)
        if (delta.repr(x) != x) pairs.emplace_back(x, delta.repr(x));
      pairs.emplace_back(ru, rv);
      delta = congruence_generated_by(a, pairs, limits);
      continue;
    }
    if (out.budget_exceeded)
      throw SizeError(
          "cube closure exceeded its tuple or work budget; for semirings the structural "
          "route (additive cancellativity plus a vanishing power) may still decide");
    return delta;
  }
}

Partition binary_commutator_tc(const Algebra& a, const Partition& alpha, const Partition& beta,
                               const Limits& limits) {
  a.check(limits);
  check_args(a, {alpha, beta});
  const int n = a.order;
  if (n == 1) return Partition::identity(1);

  // Matrices [[p(a,c), p(a,d)], [p(b,c), p(b,d)]] stored as flat quadruples,
  // generated by their own closure so this stays an independent check of the
  // cube-based computation.
  using Quad = std::array<int, 4>;
  std::set<Quad> seen;
  std::vector<Quad> items;
  auto add = [&](const Quad& t) {
    if (seen.insert(t).second) items.push_back(t);
  };
  for (int s = 0; s < n; ++s) add({s, s, s, s});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && alpha.same(x, y)) add({x, x, y, y});
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      if (c != d && beta.same(c, d)) add({c, d, c, d});

  std::size_t work = 0;
  std::size_t lo = 0;
  std::vector<int> vals;
  while (lo < items.size()) {
    std::size_t hi = items.size();
    for (const Operation& op : a.ops) {
      if (op.arity == 0) continue;
      std::vector<std::size_t> idx(op.arity, 0);
      while (true) {
        bool touches_new = false;
        for (std::size_t k : idx) touches_new = touches_new || k >= lo;
        if (touches_new) {
          Quad r;
          for (int pos = 0; pos < 4; ++pos) {
            vals.clear();
            for (std::size_t k : idx) vals.push_back(items[k][pos]);
            r[pos] = op.apply(vals, n);
          }
          if (++work > limits.work_budget)
            throw SizeError("matrix closure exceeded its work budget");
          add(r);
        }
        int k = op.arity - 1;
        while (k >= 0 && idx[k] + 1 == hi) idx[k--] = 0;
        if (k < 0) break;
        ++idx[k];
      }
    }
    lo = hi;
  }

  Partition delta = Partition::identity(n);
  while (true) {
    std::vector<std::pair<int, int>> found;
    for (const Quad& m : items)
      if (delta.same(m[0], m[1]) && !delta.same(m[2], m[3])) found.emplace_back(m[2], m[3]);
    if (found.empty()) return delta;
    for (int x = 0; x < n; ++x)
      if (delta.repr(x) != x) found.emplace_back(x, delta.repr(x));
    delta = congruence_generated_by(a, found, limits);
  }
}

Partition nilpotent_series_term(const Algebra& a, int k, const Limits& limits) {
  if (k < 1) throw DomainError("series index must be at least 1");
  Partition full = Partition::full(a.order);
  Partition gamma = higher_commutator(a, {full, full}, limits);
  for (int j = 2; j <= k; ++j) gamma = higher_commutator(a, {full, gamma}, limits);
  return gamma;
}

Partition solvable_series_term(const Algebra& a, int k, const Limits& limits) {
  if (k < 1) throw DomainError("series index must be at least 1");
  Partition full = Partition::full(a.order);
  Partition sigma = higher_commutator(a, {full, full}, limits);
  for (int j = 2; j <= k; ++j) sigma = higher_commutator(a, {sigma, sigma}, limits);
  return sigma;
}

bool is_n_nilpotent(const Algebra& a, int n, const Limits& limits) {
  return nilpotent_series_term(a, n, limits).is_identity();
}

bool is_n_solvable(const Algebra& a, int n, const Limits& limits) {
  return solvable_series_term(a, n, limits).is_identity();
}

bool is_n_supernilpotent(const Algebra& a, int n, const Limits& limits) {
  if (n < 1) throw DomainError("supernilpotency degree must be at least 1");
  std::vector<Partition> args(n + 1, Partition::full(a.order));
  return higher_commutator(a, args, limits).is_identity();
}

}  // namespace nilsem
