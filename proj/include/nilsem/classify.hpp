#ifndef NILSEM_CLASSIFY_HPP
#define NILSEM_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilsem/algebra.hpp"
#include "nilsem/ideals.hpp"
#include "nilsem/limits.hpp"

namespace nilsem {

// Classification runs every question along two independent routes — the
// commutator-series definitions on one side and the structural
// characterizations (additive cancellativity plus vanishing powers of the
// carrier) on the other — and treats any disagreement as a hard
// FalsificationError, never a warning.

// The commutator series of full congruences reaches the identity partition
// by step n.
bool nilpotent_via_commutator(const Semiring& s, int n, const Limits& limits = {});

// The (n+1)-ary commutator of n+1 copies of the full congruence is the
// identity partition. Requires n + 1 <= limits.dim_budget.
bool supernilpotent_via_commutator(const Semiring& s, int n, const Limits& limits = {});

// Structural route: additively cancellative and S^{n+1} = {o}.
bool nilpotent_via_theorem(const Semiring& s, int n, const Limits& limits = {});

// Three-valued answer for checks whose structural side has a hypothesis.
enum class TriState { yes, no, not_applicable };
std::string to_string(TriState t);

// k-solvability: derived series on one side; S^{2^k} = {o} on the other,
// which only characterizes solvability under additive cancellativity, so the
// structural answer degrades to not_applicable without it.
struct SolvableCheck {
  bool via_commutator = false;
  TriState via_theorem = TriState::not_applicable;
};
SolvableCheck solvable_check(const Semiring& s, int k, const Limits& limits = {});

// Abelian = 1-nilpotent; structurally: additively cancellative with
// identically zero multiplication. Throws FalsificationError if the two
// routes disagree.
struct AbelianCheck {
  bool via_commutator = false;
  bool via_structure = false;
};
AbelianCheck abelian_check(const Semiring& s, const Limits& limits = {});

// n-supernilpotency of the additive monoid reduct (via commutator), the
// vanishing of length-(n+1) raw products in the multiplicative reduct, and
// n-supernilpotency of the full semiring. The expected law is
// joint == (additive && multiplicative).
struct ReductClassification {
  bool additive = false;
  bool multiplicative = false;
  bool joint = false;
};
ReductClassification reduct_classification(const Semiring& s, int n, const Limits& limits = {});

// True iff every element has an additive inverse.
bool ring_check(const Semiring& s);

struct ClassificationReport {
  std::string id;  // caller-supplied label, may be empty
  int order = 0;
  bool additively_cancellative = false;
  bool has_mult_identity = false;
  // Least degrees, probed up to probe_bound (supernilpotency additionally
  // capped by the dimension budget); nullopt = not reached within the bound.
  std::optional<int> least_n_nilpotent;
  std::optional<int> least_n_supernilpotent;
  std::optional<int> least_k_solvable;
  bool abelian = false;
  bool is_ring = false;
  // S^1, S^2, ... until the powers stabilize (the last entry repeats forever).
  std::vector<Ideal> powers;
  // True when every probed degree agreed across all routes; a disagreement
  // never reaches the report — it throws FalsificationError instead.
  bool route_agreement = false;
  int probe_bound = 0;
  int supernilpotent_probe_bound = 0;
};

std::vector<std::size_t> power_sizes(const ClassificationReport& report);

// Full dual-route classification. Degrees are probed up to the order of the
// semiring by default (the structural characterization forces strictly
// decreasing powers, so a nilpotency degree, if any, is at most the order);
// max_n overrides that bound in either direction.
ClassificationReport classify(const Semiring& s, const Limits& limits = {},
                              const std::string& id = {},
                              std::optional<int> max_n = std::nullopt);

}  // namespace nilsem

#endif
