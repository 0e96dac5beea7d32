#ifndef NILSEM_IO_HPP
#define NILSEM_IO_HPP

#include <string>

#include "nilsem/algebra.hpp"

namespace nilsem {

// Text format for a semiring, auto-detected by the first non-space byte:
//
//   whitespace form                      JSON form ('{' first)
//   ---------------                      ---------------------
//   order 2                              {"order": 2,
//   zero 0                               "zero": 0,
//   add                                  "add": [[0,1],[1,1]],
//   0 1                                  "mul": [[0,0],[0,0]]}
//   1 1
//   mul
//   0 0
//   0 0
//
// Fields may appear in any order, each exactly once, except that `order`
// must precede `add` and `mul` so the matrix extent is known. Matrices are
// row-major. Parsing validates the axioms; the result is a ready Semiring.
Semiring parse_semiring(const std::string& text, const Limits& limits = {});

// Canonical whitespace emission: exactly the layout shown above, one matrix
// row per line, single spaces, trailing newline. parse(emit(s)) == s and
// emit(parse(emit(s))) is byte-identical to emit(s).
std::string emit_semiring(const Semiring& s);

// Single-line JSON object (fixed key order: order, zero, add, mul).
std::string emit_semiring_json(const Semiring& s);

}  // namespace nilsem

#endif
