#include "nilsem/classify.hpp"

#include <set>
#include <sstream>

#include "nilsem/commutator.hpp"
#include "nilsem/io.hpp"

namespace nilsem {

namespace {

Ideal zero_ideal(const Semiring& s) { return Ideal{{s.zero()}}; }

// S^1, S^2, ... computed incrementally until S^{k+1} = S^k. Powers are
// ideals and S^{k+1} is contained in S^k, so the ladder stabilizes after at
// most `order` steps and the last entry repeats forever.
std::vector<Ideal> power_ladder(const Semiring& s) {
  std::vector<Ideal> powers;
  powers.push_back(power_of_s(s, 1));
  while (true) {
    Ideal next = ideal_product(s, {powers.back(), powers.front()});
    if (next == powers.back()) break;
    powers.push_back(std::move(next));
  }
  return powers;
}

const Ideal& power_at(const std::vector<Ideal>& ladder, long long m) {
  long long idx = m - 1;
  if (idx >= static_cast<long long>(ladder.size())) idx = ladder.size() - 1;
  return ladder[static_cast<std::size_t>(idx)];
}

[[noreturn]] void falsified(const Semiring& s, const std::string& what) {
  std::ostringstream msg;
  msg << "route disagreement: " << what << "\non semiring\n" << emit_semiring(s);
  throw FalsificationError(msg.str());
}

}  // namespace

bool nilpotent_via_commutator(const Semiring& s, int n, const Limits& limits) {
  return is_n_nilpotent(s.algebra(), n, limits);
}

bool supernilpotent_via_commutator(const Semiring& s, int n, const Limits& limits) {
  return is_n_supernilpotent(s.algebra(), n, limits);
}

bool nilpotent_via_theorem(const Semiring& s, int n, const Limits& limits) {
  if (n < 1) throw DomainError("nilpotency degree must be at least 1");
  (void)limits;
  return is_additively_cancellative(s) && power_of_s(s, n + 1) == zero_ideal(s);
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    default: return "not-applicable";
  }
}

SolvableCheck solvable_check(const Semiring& s, int k, const Limits& limits) {
  if (k < 1) throw DomainError("solvability degree must be at least 1");
  SolvableCheck out;
  out.via_commutator = is_n_solvable(s.algebra(), k, limits);
  if (!is_additively_cancellative(s)) {
    out.via_theorem = TriState::not_applicable;
  } else {
    std::vector<Ideal> ladder = power_ladder(s);
    bool vanished = power_at(ladder, 1ll << k) == zero_ideal(s);
    out.via_theorem = vanished ? TriState::yes : TriState::no;
  }
  return out;
}

AbelianCheck abelian_check(const Semiring& s, const Limits& limits) {
  AbelianCheck out;
  out.via_commutator = nilpotent_via_commutator(s, 1, limits);
  bool zero_mult = true;
  for (int a = 0; a < s.order() && zero_mult; ++a)
    for (int b = 0; b < s.order() && zero_mult; ++b) zero_mult = s.mul(a, b) == s.zero();
  out.via_structure = is_additively_cancellative(s) && zero_mult;
  if (out.via_commutator != out.via_structure)
    falsified(s, "abelian via commutator = " + std::string(out.via_commutator ? "yes" : "no") +
                     " but cancellative-with-zero-multiplication = " +
                     std::string(out.via_structure ? "yes" : "no"));
  return out;
}

ReductClassification reduct_classification(const Semiring& s, int n, const Limits& limits) {
  if (n < 1) throw DomainError("degree must be at least 1");
  ReductClassification out;
  out.additive = is_n_supernilpotent(additive_reduct(s), n, limits);
  // Raw length-(n+1) products of the multiplicative reduct, no sum closure.
  std::set<int> prods;
  for (int x = 0; x < s.order(); ++x) prods.insert(x);
  for (int len = 2; len <= n + 1; ++len) {
    std::set<int> next;
    for (int p : prods)
      for (int x = 0; x < s.order(); ++x) next.insert(s.mul(p, x));
    prods = std::move(next);
  }
  out.multiplicative = prods.size() == 1 && *prods.begin() == s.zero();
  out.joint = is_n_supernilpotent(s.algebra(), n, limits);
  return out;
}

bool ring_check(const Semiring& s) {
  for (int a = 0; a < s.order(); ++a) {
    bool has_inverse = false;
    for (int b = 0; b < s.order() && !has_inverse; ++b) has_inverse = s.add(a, b) == s.zero();
    if (!has_inverse) return false;
  }
  return true;
}

std::vector<std::size_t> power_sizes(const ClassificationReport& report) {
  std::vector<std::size_t> sizes;
  for (const Ideal& p : report.powers) sizes.push_back(p.elems.size());
  return sizes;
}

ClassificationReport classify(const Semiring& s, const Limits& limits, const std::string& id,
                              std::optional<int> max_n) {
  if (max_n && *max_n < 1) throw DomainError("probe bound must be at least 1");
  ClassificationReport report;
  report.id = id;
  report.order = s.order();
  report.additively_cancellative = is_additively_cancellative(s);
  report.has_mult_identity = multiplicative_identity(s) >= 0;
  report.is_ring = ring_check(s);
  report.powers = power_ladder(s);
  report.probe_bound = max_n ? *max_n : s.order();
  report.supernilpotent_probe_bound = std::min(report.probe_bound, limits.dim_budget - 1);

  const Algebra& alg = s.algebra();
  const Partition full = Partition::full(s.order());
  const Ideal zero = zero_ideal(s);

  // Commutator series, reusing each term for the next (the series is
  // monotone, so once it stabilizes every later term is equal).
  std::vector<bool> nil_c(report.probe_bound + 1, false);
  {
    Partition gamma = higher_commutator(alg, {full, full}, limits);
    nil_c[1] = gamma.is_identity();
    for (int n = 2; n <= report.probe_bound; ++n) {
      Partition next = gamma.is_identity() ? gamma : higher_commutator(alg, {full, gamma}, limits);
      gamma = std::move(next);
      nil_c[n] = gamma.is_identity();
    }
  }
  std::vector<bool> solv_c(report.probe_bound + 1, false);
  {
    Partition sigma = higher_commutator(alg, {full, full}, limits);
    solv_c[1] = sigma.is_identity();
    for (int k = 2; k <= report.probe_bound; ++k) {
      Partition next = sigma.is_identity() ? sigma : higher_commutator(alg, {sigma, sigma}, limits);
      sigma = std::move(next);
      solv_c[k] = sigma.is_identity();
    }
  }
  // Appending arguments to a higher commutator only shrinks it, so once some
  // degree holds every larger degree holds and its cube need not be built.
  std::vector<bool> super_c(report.supernilpotent_probe_bound + 1, false);
  for (int n = 1; n <= report.supernilpotent_probe_bound; ++n)
    super_c[n] = (n > 1 && super_c[n - 1]) || supernilpotent_via_commutator(s, n, limits);

  // Cross-check every probed degree along every route.
  for (int n = 1; n <= report.probe_bound; ++n) {
    bool theorem = report.additively_cancellative && power_at(report.powers, n + 1) == zero;
    if (nil_c[n] != theorem)
      falsified(s, "degree " + std::to_string(n) + ": commutator series says " +
                       (nil_c[n] ? "nilpotent" : "not nilpotent") +
                       " but the structural route (cancellative and vanishing power) says " +
                       (theorem ? "nilpotent" : "not nilpotent"));
    if (n <= report.supernilpotent_probe_bound && super_c[n] != nil_c[n])
      falsified(s, "degree " + std::to_string(n) + ": higher commutator says " +
                       (super_c[n] ? "supernilpotent" : "not supernilpotent") +
                       " but the commutator series says " +
                       (nil_c[n] ? "nilpotent" : "not nilpotent"));
  }
  for (int k = 1; k <= report.probe_bound; ++k) {
    if (!report.additively_cancellative) break;
    bool theorem = power_at(report.powers, 1ll << k) == zero;
    if (solv_c[k] != theorem)
      falsified(s, "degree " + std::to_string(k) + ": derived series says " +
                       (solv_c[k] ? "solvable" : "not solvable") +
                       " but the vanishing-power route says " +
                       (theorem ? "solvable" : "not solvable"));
  }
  report.abelian = abelian_check(s, limits).via_commutator;

  for (int n = 1; n <= report.probe_bound; ++n)
    if (nil_c[n]) {
      report.least_n_nilpotent = n;
      break;
    }
  for (int n = 1; n <= report.supernilpotent_probe_bound; ++n)
    if (super_c[n]) {
      report.least_n_supernilpotent = n;
      break;
    }
  for (int k = 1; k <= report.probe_bound; ++k)
    if (solv_c[k]) {
      report.least_k_solvable = k;
      break;
    }
  report.route_agreement = true;
  return report;
}

}  // namespace nilsem
