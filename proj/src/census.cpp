#include "nilsem/census.hpp"

#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "nilsem/commutator.hpp"
#include "nilsem/enumerate.hpp"
#include "nilsem/ideals.hpp"
#include "nilsem/io.hpp"
#include "nilsem/terms.hpp"

namespace nilsem {

namespace {

constexpr int kFullCheckOrderBound = 3;

[[noreturn]] void falsify(const Semiring& s, const std::string& check, const std::string& what) {
  std::ostringstream msg;
  msg << "census check '" << check << "' failed: " << what << "\non semiring\n"
      << emit_semiring(s);
  throw FalsificationError(msg.str());
}

bool zero_multiplication(const Semiring& s) {
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (s.mul(a, b) != s.zero()) return false;
  return true;
}

// Length-m products x_1 * ... * x_m as a plain subset (no sum closure):
// the power notion of the multiplicative reduct seen as a semigroup with
// zero.
bool raw_products_vanish(const Semiring& s, int m) {
  std::set<int> prods;
  for (int x = 0; x < s.order(); ++x) prods.insert(x);
  for (int len = 2; len <= m; ++len) {
    std::set<int> next;
    for (int p : prods)
      for (int x = 0; x < s.order(); ++x) next.insert(s.mul(p, x));
    prods = std::move(next);
  }
  return prods.size() == 1 && *prods.begin() == s.zero();
}

Ideal zero_ideal(const Semiring& s) { return Ideal{{s.zero()}}; }

// Appending arguments to a higher commutator only shrinks it, so once some
// degree of supernilpotency holds every larger degree holds. At census
// orders every degree is still decided from its own cube; above the
// full-check bound the shortcut replaces cubes that would not fit the
// budgets anyway.
bool supernilpotent_probe(const Semiring& s, int n, bool& known_below, const Limits& limits) {
  if (known_below && s.order() > kFullCheckOrderBound) return true;
  bool yes = supernilpotent_via_commutator(s, n, limits);
  known_below = known_below || yes;
  return yes;
}

// The three routes of the main equivalence, degree by degree.
void check_main_equivalence(const Semiring& s, const Limits& limits) {
  bool super_below = false;
  for (int n = 1; n <= 3; ++n) {
    bool series = nilpotent_via_commutator(s, n, limits);
    bool structural = nilpotent_via_theorem(s, n, limits);
    bool higher = supernilpotent_probe(s, n, super_below, limits);
    if (series != structural || structural != higher)
      falsify(s, "main-equivalence",
              "degree " + std::to_string(n) + ": series=" + (series ? "yes" : "no") +
                  " structural=" + (structural ? "yes" : "no") +
                  " higher=" + (higher ? "yes" : "no"));
  }
}

// A multiplicative identity forces every commutator of full congruences to
// be full.
void check_identity_full_commutators(const Semiring& s, const Limits& limits) {
  if (multiplicative_identity(s) < 0) return;
  Partition full = Partition::full(s.order());
  for (int arity = 2; arity <= 3; ++arity) {
    std::vector<Partition> args(arity, full);
    if (!higher_commutator(s.algebra(), args, limits).is_full())
      falsify(s, "identity-implies-full-commutators",
              "the " + std::to_string(arity) + "-ary commutator of full congruences is proper "
              "despite a multiplicative identity");
  }
}

// rho_of_ideal already computes the explicit a+i=b+j relation and the
// generated congruence side by side and throws InternalError on mismatch.
void check_rho_routes(const Semiring& s, const std::vector<Ideal>& ideals) {
  for (const Ideal& ideal : ideals) (void)rho_of_ideal(s, ideal);
}

void check_power_products(const Semiring& s) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      Ideal lhs = ideal_commutator(s, {power_of_s(s, m), power_of_s(s, n)});
      if (!(lhs == power_of_s(s, m + n)))
        falsify(s, "power-products",
                "[S^" + std::to_string(m) + ",S^" + std::to_string(n) + "] = " + lhs.to_string() +
                    " differs from S^" + std::to_string(m + n));
    }
  Ideal s1 = power_of_s(s, 1);
  Ideal triple = ideal_commutator(s, {s1, s1, s1});
  if (!(triple == power_of_s(s, 3)))
    falsify(s, "power-products", "[S,S,S] = " + triple.to_string() + " differs from S^3");
}

// The translation criterion: the centralizing condition for (rho_I, rho_J)
// modulo rho_[I,J] holds iff the single polynomial x+y already respects it.
void check_plus_translation(const Semiring& s, const std::vector<Ideal>& ideals,
                            const Limits& limits) {
  for (const Ideal& I : ideals)
    for (const Ideal& J : ideals) {
      Partition rho_i = rho_of_ideal(s, I);
      Partition rho_j = rho_of_ideal(s, J);
      Partition rho_c = rho_of_ideal(s, ideal_commutator(s, {I, J}));
      bool via_condition = centralizes(s.algebra(), {rho_i, rho_j}, rho_c, limits);
      bool via_translation = true;
      for (int a = 0; a < s.order() && via_translation; ++a)
        for (int b = 0; b < s.order() && via_translation; ++b) {
          if (!rho_i.same(a, b)) continue;
          for (int c = 0; c < s.order() && via_translation; ++c)
            for (int d = 0; d < s.order() && via_translation; ++d) {
              if (!rho_j.same(c, d)) continue;
              if (rho_c.same(s.add(a, c), s.add(a, d)) &&
                  !rho_c.same(s.add(b, c), s.add(b, d)))
                via_translation = false;
            }
        }
      if (via_condition != via_translation)
        falsify(s, "plus-translation-criterion",
                "ideals " + I.to_string() + ", " + J.to_string() + ": condition says " +
                    (via_condition ? "yes" : "no") + " but the x+y criterion says " +
                    (via_translation ? "yes" : "no"));
    }
}

// rho of the ideal commutator sits below the congruence commutator of the
// rhos — for every tuple of ideals, unconditionally.
void check_rho_below_commutator(const Semiring& s, const std::vector<Ideal>& ideals,
                                const Limits& limits) {
  std::vector<std::vector<const Ideal*>> tuples;
  for (const Ideal& I : ideals)
    for (const Ideal& J : ideals) {
      tuples.push_back({&I, &J});
      for (const Ideal& K : ideals) tuples.push_back({&I, &J, &K});
    }
  for (const auto& tuple : tuples) {
    std::vector<Ideal> factors;
    std::vector<Partition> rhos;
    for (const Ideal* ideal : tuple) {
      factors.push_back(*ideal);
      rhos.push_back(rho_of_ideal(s, *ideal));
    }
    Partition lower = rho_of_ideal(s, ideal_commutator(s, factors));
    Partition upper = higher_commutator(s.algebra(), rhos, limits);
    if (!lower.leq(upper)) {
      std::string names;
      for (const Ideal* ideal : tuple) names += ideal->to_string() + " ";
      falsify(s, "rho-below-commutator",
              "for ideals " + names + "rho of the ideal commutator " + lower.to_string() +
                  " is not below the congruence commutator " + upper.to_string());
    }
  }
}

// Under additive cancellativity the inequality is an equality.
void check_cancellative_exact(const Semiring& s, const std::vector<Ideal>& ideals,
                              const Limits& limits) {
  if (!is_additively_cancellative(s)) return;
  for (const Ideal& I : ideals)
    for (const Ideal& J : ideals) {
      Partition lhs = higher_commutator(
          s.algebra(), {rho_of_ideal(s, I), rho_of_ideal(s, J)}, limits);
      Partition rhs = rho_of_ideal(s, ideal_commutator(s, {I, J}));
      if (!(lhs == rhs))
        falsify(s, "cancellative-exact-commutator",
                "ideals " + I.to_string() + ", " + J.to_string() + ": [rho_I,rho_J] = " +
                    lhs.to_string() + " but rho_[I,J] = " + rhs.to_string());
    }
}

// A fixed batch of polynomials must evaluate exactly like their
// sum-of-monomials normal forms under every assignment.
void check_monomial_normal_form(const Semiring& s) {
  std::vector<TermPtr> batch;
  TermPtr x = Term::var(0, 0), y = Term::var(1, 0);
  for (int c = 0; c < s.order(); ++c) {
    TermPtr k = Term::constant(c);
    batch.push_back(Term::product({Term::sum({x, k}), y}));
    batch.push_back(Term::sum({Term::product({x, Term::sum({y, y})}), Term::product({k, x})}));
    batch.push_back(Term::product({Term::sum({x, y}), Term::sum({y, k}), x}));
  }
  for (const TermPtr& term : batch) {
    std::vector<TermPtr> monomials = normalize_to_monomials(term);
    TermPtr normal = monomials.size() == 1 ? monomials[0] : Term::sum(monomials);
    for (int vx = 0; vx < s.order(); ++vx)
      for (int vy = 0; vy < s.order(); ++vy) {
        std::vector<std::vector<int>> bound = {{vx}, {vy}};
        if (evaluate(term, bound, s) != evaluate(normal, bound, s))
          falsify(s, "monomial-normal-form",
                  "term " + term->to_string() + " and its normal form " + normal->to_string() +
                      " differ at x1_1=" + std::to_string(vx) + ", x2_1=" + std::to_string(vy));
      }
  }
}

void check_solvable_powers(const Semiring& s, const Limits& limits) {
  if (!is_additively_cancellative(s)) return;
  for (int k = 1; k <= 2; ++k) {
    bool series = is_n_solvable(s.algebra(), k, limits);
    bool structural = power_of_s(s, 1 << k) == zero_ideal(s);
    if (series != structural)
      falsify(s, "solvable-powers",
              "degree " + std::to_string(k) + ": derived series says " +
                  (series ? "solvable" : "not solvable") + " but S^" + std::to_string(1 << k) +
                  (structural ? " vanishes" : " does not vanish"));
  }
}

// Joint supernilpotency is exactly supernilpotency of both reducts.
void check_reduct_joint(const Semiring& s, const Limits& limits) {
  for (int n = 1; n <= 2; ++n) {
    ReductClassification rc = reduct_classification(s, n, limits);
    if (rc.joint != (rc.additive && rc.multiplicative))
      falsify(s, "reduct-joint",
              "degree " + std::to_string(n) + ": joint=" + (rc.joint ? "yes" : "no") +
                  " additive=" + (rc.additive ? "yes" : "no") +
                  " multiplicative=" + (rc.multiplicative ? "yes" : "no"));
  }
}

// For the multiplicative reduct alone, supernilpotency is the vanishing of
// raw products.
void check_multiplicative_reduct_powers(const Semiring& s, const Limits& limits) {
  Algebra reduct = multiplicative_reduct(s);
  for (int k = 1; k <= 2; ++k) {
    bool via_commutator = is_n_supernilpotent(reduct, k, limits);
    bool via_products = raw_products_vanish(s, k + 1);
    if (via_commutator != via_products)
      falsify(s, "multiplicative-reduct-powers",
              "degree " + std::to_string(k) + ": reduct commutator says " +
                  (via_commutator ? "yes" : "no") + " but raw products " +
                  (via_products ? "vanish" : "do not vanish"));
  }
}

void check_abelian_structure(const Semiring& s, const Limits& limits) {
  (void)abelian_check(s, limits);  // throws FalsificationError on disagreement
}

void check_abelian_zero_ring(const Semiring& s, bool abelian) {
  bool zero_ring = ring_check(s) && zero_multiplication(s);
  if (abelian != zero_ring)
    falsify(s, "abelian-zero-ring",
            std::string("abelian=") + (abelian ? "yes" : "no") + " but zero-ring=" +
                (zero_ring ? "yes" : "no"));
}

void check_supernilpotent_ring(const Semiring& s, const Limits& limits) {
  bool super_below = false;
  for (int k = 1; k <= 3; ++k) {
    bool super = supernilpotent_probe(s, k, super_below, limits);
    bool nil_ring = ring_check(s) && power_of_s(s, k + 1) == zero_ideal(s);
    if (super != nil_ring)
      falsify(s, "supernilpotent-ring",
              "degree " + std::to_string(k) + ": supernilpotent=" + (super ? "yes" : "no") +
                  " but nilpotent-ring=" + (nil_ring ? "yes" : "no"));
  }
}

// Nilpotency or supernilpotency of the additive monoid reduct forces
// cancellativity.
void check_additive_nilpotent_cancellative(const Semiring& s, const Limits& limits) {
  Algebra reduct = additive_reduct(s);
  bool reduct_nilpotent = false;
  for (int n = 1; n <= 2 && !reduct_nilpotent; ++n)
    reduct_nilpotent = is_n_nilpotent(reduct, n, limits) || is_n_supernilpotent(reduct, n, limits);
  if (reduct_nilpotent && !is_additively_cancellative(s))
    falsify(s, "additive-nilpotent-cancellative",
            "the additive reduct is nilpotent but addition is not cancellative");
}

// The ideal power ladder collapses to {o} exactly when plain products of the
// same length all vanish: sums of zero products are zero.
void check_powers_vs_raw_products(const Semiring& s) {
  for (int m = 2; m <= s.order() + 1; ++m) {
    bool raw = raw_products_vanish(s, m);
    bool ladder = power_of_s(s, m) == zero_ideal(s);
    if (raw != ladder)
      falsify(s, "powers-vs-raw-products",
              "length " + std::to_string(m) + ": raw products " +
                  (raw ? "vanish" : "do not vanish") + " but the ideal power is " +
                  (ladder ? "" : "not ") + "the zero ideal");
  }
}

// With zero multiplication, additive cancellativity and being a ring say the
// same thing (a finite cancellative commutative monoid is a group).
void check_zero_ring_structure(const Semiring& s) {
  bool zero_mult = zero_multiplication(s);
  bool lhs = is_additively_cancellative(s) && zero_mult;
  bool rhs = ring_check(s) && zero_mult;
  if (lhs != rhs)
    falsify(s, "zero-ring-structure",
            std::string("cancellative-with-zero-multiplication=") + (lhs ? "yes" : "no") +
                " but ring-with-zero-multiplication=" + (rhs ? "yes" : "no"));
}

ClassificationReport structural_report(const Semiring& s, const Limits& limits) {
  ClassificationReport report;
  report.order = s.order();
  report.additively_cancellative = is_additively_cancellative(s);
  report.has_mult_identity = multiplicative_identity(s) >= 0;
  report.is_ring = ring_check(s);
  report.probe_bound = s.order();
  report.supernilpotent_probe_bound = std::min(report.probe_bound, limits.dim_budget - 1);
  report.powers.push_back(power_of_s(s, 1));
  while (true) {
    Ideal next = ideal_product(s, {report.powers.back(), report.powers.front()});
    if (next == report.powers.back()) break;
    report.powers.push_back(std::move(next));
  }
  Ideal zero = zero_ideal(s);
  if (report.additively_cancellative) {
    auto power = [&](long long m) -> const Ideal& {
      std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(m - 1),
                                              report.powers.size() - 1);
      return report.powers[idx];
    };
    for (int n = 1; n <= report.probe_bound; ++n)
      if (power(n + 1) == zero) {
        report.least_n_nilpotent = n;
        break;
      }
    report.least_n_supernilpotent = report.least_n_nilpotent;
    for (int k = 1; k <= report.probe_bound; ++k)
      if (power(1ll << k) == zero) {
        report.least_k_solvable = k;
        break;
      }
  }
  report.abelian = report.additively_cancellative && zero_multiplication(s);
  report.route_agreement = true;
  return report;
}

}  // namespace

std::vector<std::pair<std::string, bool>> verify_laws(const Semiring& s, const Limits& limits) {
  std::vector<std::pair<std::string, bool>> flags;
  auto passed = [&flags](const char* name) { flags.emplace_back(name, true); };
  std::vector<Ideal> ideals = all_ideals(s);
  check_main_equivalence(s, limits);
  passed("main-equivalence");
  check_identity_full_commutators(s, limits);
  passed("identity-implies-full-commutators");
  check_rho_routes(s, ideals);
  passed("rho-formula-vs-generated");
  check_power_products(s);
  passed("power-products");
  check_powers_vs_raw_products(s);
  passed("powers-vs-raw-products");
  check_zero_ring_structure(s);
  passed("zero-ring-structure");
  check_plus_translation(s, ideals, limits);
  passed("plus-translation-criterion");
  check_rho_below_commutator(s, ideals, limits);
  passed("rho-below-commutator");
  check_cancellative_exact(s, ideals, limits);
  passed("cancellative-exact-commutator");
  check_monomial_normal_form(s);
  passed("monomial-normal-form");
  check_solvable_powers(s, limits);
  passed("solvable-powers");
  check_reduct_joint(s, limits);
  passed("reduct-joint");
  check_multiplicative_reduct_powers(s, limits);
  passed("multiplicative-reduct-powers");
  check_abelian_structure(s, limits);
  passed("abelian-structure");
  check_abelian_zero_ring(s, abelian_check(s, limits).via_commutator);
  passed("abelian-zero-ring");
  check_supernilpotent_ring(s, limits);
  passed("supernilpotent-ring");
  check_additive_nilpotent_cancellative(s, limits);
  passed("additive-nilpotent-cancellative");
  return flags;
}

CensusResult run_census(const CensusTask& task, const Limits& limits) {
  EnumerationTask etask;
  etask.order = task.order;
  etask.up_to_iso = true;
  std::vector<Semiring> algebras = enumerate_semirings(etask, limits);

  bool full = task.force_full || task.order <= kFullCheckOrderBound;
  CensusResult result;
  result.summary.order = task.order;
  result.summary.full_checks = full;
  result.summary.algebra_count = algebras.size();

  std::vector<std::pair<std::string, std::size_t>>& counts = result.summary.flag_pass_counts;
  auto bump = [&counts](const std::string& name) {
    for (auto& [flag, count] : counts)
      if (flag == name) {
        ++count;
        return;
      }
    counts.emplace_back(name, 1);
  };

  int index = 0;
  for (const Semiring& s : algebras) {
    std::string id = "order" + std::to_string(task.order) + "-" + std::to_string(index++);
    std::vector<std::pair<std::string, bool>> flags;
    ClassificationReport report;
    if (full) {
      report = classify(s, limits, id);
      flags = verify_laws(s, limits);
    } else {
      report = structural_report(s, limits);
      report.id = id;
      std::vector<Ideal> ideals = all_ideals(s);
      auto passed = [&flags](const char* name) { flags.emplace_back(name, true); };
      check_rho_routes(s, ideals);
      passed("rho-formula-vs-generated");
      check_power_products(s);
      passed("power-products");
      check_monomial_normal_form(s);
      passed("monomial-normal-form");
      check_powers_vs_raw_products(s);
      passed("powers-vs-raw-products");
      check_zero_ring_structure(s);
      passed("zero-ring-structure");
    }
    for (const auto& [name, pass] : flags) {
      (void)pass;
      bump(name);
    }

    result.summary.abelian_count += report.abelian ? 1 : 0;
    result.summary.cancellative_count += report.additively_cancellative ? 1 : 0;
    result.summary.ring_count += report.is_ring ? 1 : 0;
    result.summary.identity_count += report.has_mult_identity ? 1 : 0;
    result.records.push_back(CensusRecord{s, std::move(report), full, std::move(flags)});
  }
  return result;
}

namespace {

nlohmann::ordered_json table_json(const std::vector<int>& table, int order) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < order; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < order; ++j) row.push_back(table[i * order + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json optional_json(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

std::string census_record_to_json(const CensusRecord& record) {
  const Semiring& s = record.semiring;
  nlohmann::ordered_json j;
  j["id"] = record.report.id;
  j["order"] = s.order();
  j["zero"] = s.zero();
  j["add"] = table_json(s.add_table(), s.order());
  j["mul"] = table_json(s.mul_table(), s.order());
  j["additively_cancellative"] = record.report.additively_cancellative;
  j["has_mult_identity"] = record.report.has_mult_identity;
  j["abelian"] = record.report.abelian;
  j["is_ring"] = record.report.is_ring;
  j["least_n_nilpotent"] = optional_json(record.report.least_n_nilpotent);
  j["least_n_supernilpotent"] = optional_json(record.report.least_n_supernilpotent);
  j["least_k_solvable"] = optional_json(record.report.least_k_solvable);
  j["power_sizes"] = power_sizes(record.report);
  j["route_agreement"] = record.report.route_agreement;
  j["full_checks"] = record.full_checks;
  nlohmann::ordered_json flags;
  for (const auto& [name, pass] : record.flags) flags[name] = pass;
  j["flags"] = std::move(flags);
  return j.dump();
}

std::string census_summary_to_json(const CensusSummary& summary) {
  nlohmann::ordered_json j;
  j["summary"] = true;
  j["order"] = summary.order;
  j["full_checks"] = summary.full_checks;
  j["algebras"] = summary.algebra_count;
  j["abelian"] = summary.abelian_count;
  j["additively_cancellative"] = summary.cancellative_count;
  j["rings"] = summary.ring_count;
  j["with_identity"] = summary.identity_count;
  nlohmann::ordered_json flags;
  for (const auto& [name, count] : summary.flag_pass_counts) flags[name] = count;
  j["flag_pass_counts"] = std::move(flags);
  return j.dump();
}

void write_census_jsonl(std::ostream& os, const CensusResult& result) {
  for (const CensusRecord& record : result.records) os << census_record_to_json(record) << "\n";
  os << census_summary_to_json(result.summary) << "\n";
}

}  // namespace nilsem
