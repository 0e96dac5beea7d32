#include "nilsem/algebra.hpp"

#include <algorithm>

namespace nilsem {

std::string AxiomViolation::message() const {
  std::string s = "axiom " + axiom + " fails at witness (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(witness[i]);
  }
  s += ")";
  return s;
}

int Operation::apply(const std::vector<int>& args, int order) const {
  std::size_t idx = 0;
  for (int a : args) idx = idx * order + a;
  return table[idx];
}

void Algebra::check(const Limits& limits) const {
  if (order < 1) throw DomainError("algebra order must be at least 1");
  if (order > limits.max_order)
    throw SizeError("algebra order " + std::to_string(order) + " exceeds the bound " +
                    std::to_string(limits.max_order));
  for (const Operation& op : ops) {
    if (op.arity < 0) throw DomainError("operation arity must be nonnegative");
    std::size_t want = 1;
    for (int i = 0; i < op.arity; ++i) want *= order;
    if (op.table.size() != want)
      throw DomainError("operation " + op.name + " has a table of wrong size");
    for (int v : op.table)
      if (v < 0 || v >= order)
        throw DomainError("operation " + op.name + " has an out-of-range entry");
  }
}

Algebra semiring_algebra(int order, int zero, const std::vector<int>& add,
                         const std::vector<int>& mul) {
  Algebra a;
  a.order = order;
  a.ops = {Operation{"add", 2, add}, Operation{"mul", 2, mul},
           Operation{"zero", 0, std::vector<int>{zero}}};
  return a;
}

namespace {

std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace

std::variant<Semiring, AxiomViolation> validate_semiring(const Algebra& alg, int zero,
                                                         const Limits& limits) {
  alg.check(limits);
  if (alg.ops.size() < 2 || alg.ops[0].arity != 2 || alg.ops[1].arity != 2)
    throw DomainError("semiring signature needs two binary operations (add, mul)");
  if (alg.ops.size() > 3 || (alg.ops.size() == 3 && alg.ops[2].arity != 0))
    throw DomainError("semiring signature admits at most one extra nullary operation");
  if (zero < 0 || zero >= alg.order) throw DomainError("zero is out of range");
  if (alg.ops.size() == 3 && alg.ops[2].table[0] != zero)
    throw DomainError("nullary operation disagrees with the declared zero");

  const int n = alg.order;
  const std::vector<int>& add = alg.ops[0].table;
  const std::vector<int>& mul = alg.ops[1].table;
  auto A = [&](int x, int y) { return add[x * n + y]; };
  auto M = [&](int x, int y) { return mul[x * n + y]; };

  // Axioms in a fixed order; within each, witnesses are scanned
  // lexicographically, so the reported violation is deterministic.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (A(A(a, b), c) != A(a, A(b, c)))
          return AxiomViolation{"add-associativity", {a, b, c}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (A(a, b) != A(b, a)) return AxiomViolation{"add-commutativity", {a, b}};
  for (int a = 0; a < n; ++a)
    if (A(a, zero) != a || A(zero, a) != a) return AxiomViolation{"add-identity", {a}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (M(M(a, b), c) != M(a, M(b, c)))
          return AxiomViolation{"mul-associativity", {a, b, c}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a == zero || b == zero) && M(a, b) != zero)
        return AxiomViolation{"absorbing-zero", {a, b}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          return AxiomViolation{"left-distributivity", {a, b, c}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (M(A(a, b), c) != A(M(a, c), M(b, c)))
          return AxiomViolation{"right-distributivity", {a, b, c}};

  Algebra full = semiring_algebra(n, zero, add, mul);
  return Semiring(std::move(full), zero);
}

Semiring make_semiring(const Algebra& alg, int zero, const Limits& limits) {
  auto r = validate_semiring(alg, zero, limits);
  if (auto* v = std::get_if<AxiomViolation>(&r)) throw AxiomError(*v);
  return std::get<Semiring>(std::move(r));
}

Semiring make_semiring(int order, int zero, const std::vector<std::vector<int>>& add,
                       const std::vector<std::vector<int>>& mul, const Limits& limits) {
  return make_semiring(semiring_algebra(order, zero, flatten(add), flatten(mul)), zero, limits);
}

bool is_congruence(const Algebra& alg, const Partition& p) {
  // For an equivalence relation, compatibility with single-coordinate
  // changes already gives compatibility in all coordinates at once
  // (chain the changes and use transitivity).
  const int n = alg.order;
  if (p.order() != n) throw DomainError("partition order does not match the algebra");
  for (const Operation& op : alg.ops) {
    if (op.arity == 0) continue;
    std::vector<int> args(op.arity, 0);
    while (true) {
      int base = op.apply(args, n);
      for (int pos = 0; pos < op.arity; ++pos) {
        int saved = args[pos];
        for (int y = 0; y < n; ++y) {
          if (y == saved || !p.same(saved, y)) continue;
          args[pos] = y;
          if (!p.same(base, op.apply(args, n))) {
            return false;
          }
        }
        args[pos] = saved;
      }
      int pos = op.arity - 1;
      while (pos >= 0 && args[pos] == n - 1) args[pos--] = 0;
      if (pos < 0) break;
      ++args[pos];
    }
  }
  return true;
}

bool is_additively_cancellative(const Semiring& s) {
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = c + 1; d < n; ++d)
        if (s.add(a, c) == s.add(a, d)) return false;
  return true;
}

Algebra additive_reduct(const Semiring& s) {
  Algebra a;
  a.order = s.order();
  a.ops = {s.algebra().ops[0], Operation{"zero", 0, std::vector<int>{s.zero()}}};
  return a;
}

Algebra multiplicative_reduct(const Semiring& s) {
  Algebra a;
  a.order = s.order();
  a.ops = {s.algebra().ops[1], Operation{"zero", 0, std::vector<int>{s.zero()}}};
  return a;
}

int multiplicative_identity(const Semiring& s) {
  const int n = s.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = s.mul(e, x) == x && s.mul(x, e) == x;
    if (ok) return e;
  }
  return -1;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Partition& delta) {
  if (!is_congruence(a, delta))
    throw InternalError("quotient requested along a partition that is not a congruence");
  QuotientAlgebra q;
  q.cls.resize(a.order);
  for (int x = 0; x < a.order; ++x)
    if (delta.repr(x) == x) {
      q.cls[x] = static_cast<int>(q.rep.size());
      q.rep.push_back(x);
    }
  for (int x = 0; x < a.order; ++x) q.cls[x] = q.cls[delta.repr(x)];

  q.alg.order = static_cast<int>(q.rep.size());
  for (const Operation& op : a.ops) {
    Operation qop{op.name, op.arity, {}};
    std::size_t cells = 1;
    for (int i = 0; i < op.arity; ++i) cells *= q.alg.order;
    qop.table.resize(cells);
    std::vector<int> args(op.arity, 0);
    for (std::size_t idx = 0; idx < cells; ++idx) {
      std::size_t rest = idx;
      for (int i = op.arity - 1; i >= 0; --i) {
        args[i] = q.rep[rest % q.alg.order];
        rest /= q.alg.order;
      }
      qop.table[idx] = q.cls[op.apply(args, a.order)];
    }
    q.alg.ops.push_back(std::move(qop));
  }
  return q;
}

Semiring quotient_semiring(const Semiring& s, const Partition& delta) {
  QuotientAlgebra q = quotient_algebra(s.algebra(), delta);
  return make_semiring(q.alg, q.cls[s.zero()]);
}

}  // namespace nilsem
