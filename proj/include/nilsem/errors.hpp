#ifndef NILSEM_ERRORS_HPP
#define NILSEM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace nilsem {

// Exit-code buckets used by the CLI: domain errors (bad input, failed axiom,
// out-of-range reference) map to 1, exceeded budgets to 2, and anything that
// would contradict an identity the library is supposed to uphold to 3.

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A named axiom together with the first element tuple witnessing its failure.
struct AxiomViolation {
  std::string axiom;         // e.g. "absorbing-zero"
  std::vector<int> witness;  // element indices, in axiom-specific order
  std::string message() const;
};

struct AxiomError : DomainError {
  AxiomViolation violation;
  explicit AxiomError(AxiomViolation v) : DomainError(v.message()), violation(std::move(v)) {}
};

struct ParseError : DomainError {
  std::size_t position;  // byte offset into the source text
  ParseError(const std::string& what, std::size_t pos)
      : DomainError(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct IndexError : DomainError {
  using DomainError::DomainError;
};

struct ArityError : DomainError {
  using DomainError::DomainError;
};

// A precondition of a lemma-style computation does not hold for the input.
struct HypothesisError : DomainError {
  using DomainError::DomainError;
};

// A configured budget (order bound, cube dimension, tuple or work budget) was exceeded.
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent constructions of the same object disagreed.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// A structural identity that must hold for every valid input failed on a
// concrete algebra; carries a printable witness.
struct FalsificationError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nilsem

#endif
