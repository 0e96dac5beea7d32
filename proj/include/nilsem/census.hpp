#ifndef NILSEM_CENSUS_HPP
#define NILSEM_CENSUS_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nilsem/classify.hpp"
#include "nilsem/limits.hpp"

namespace nilsem {

// Exhaustive verification run: every semiring of the given order (up to
// isomorphism) is classified and every applicable law is checked on it.
// A violated law does not become a false flag — it halts the census with a
// FalsificationError carrying the witness, so flags on returned records are
// always true; they document which checks ran.
struct CensusTask {
  int order = 2;
  // Commutator-based checks run by default up to order 3; above that only
  // the structural checks run unless force_full is set.
  bool force_full = false;
};

struct CensusRecord {
  Semiring semiring;
  ClassificationReport report;
  bool full_checks = true;
  std::vector<std::pair<std::string, bool>> flags;
};

struct CensusSummary {
  int order = 0;
  bool full_checks = true;
  std::size_t algebra_count = 0;
  std::size_t abelian_count = 0;
  std::size_t cancellative_count = 0;
  std::size_t ring_count = 0;
  std::size_t identity_count = 0;
  std::vector<std::pair<std::string, std::size_t>> flag_pass_counts;
};

struct CensusResult {
  std::vector<CensusRecord> records;
  CensusSummary summary;
};

// In structural mode the report's least degrees come from the structural
// characterization alone (cancellativity + vanishing powers), which the full
// mode verifies against the commutator definitions at every order it covers.
CensusResult run_census(const CensusTask& task, const Limits& limits = {});

// Runs the complete battery of commutator-based and structural laws on one
// semiring, throwing FalsificationError with a witness at the first
// violation. Returns the names of the checks that ran (all paired with
// true). This is the per-algebra worker of the full census and of the
// built-in verification command.
std::vector<std::pair<std::string, bool>> verify_laws(const Semiring& s,
                                                      const Limits& limits = {});

std::string census_record_to_json(const CensusRecord& record);
std::string census_summary_to_json(const CensusSummary& summary);

// One JSON object per line: every record, then the summary.
void write_census_jsonl(std::ostream& os, const CensusResult& result);

}  // namespace nilsem

#endif
