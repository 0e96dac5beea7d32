#ifndef NILSEM_TERMS_HPP
#define NILSEM_TERMS_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nilsem/algebra.hpp"

namespace nilsem {

// Term over the semiring signature with variables grouped into tuples:
// Var{g,c} is component c of tuple number g (both 0-based internally; the
// surface syntax x<i>_<j> is 1-based). Sums and products are n-ary with at
// least two children; products keep their factor order, and nested sums or
// products are flattened on construction, so two monomials are equal iff
// their trees are.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Const, Sum, Product };

  Kind kind;
  int group = 0, component = 0;  // Var
  int value = 0;                 // Const
  std::vector<TermPtr> children; // Sum / Product

  static TermPtr var(int group, int component);
  static TermPtr constant(int value);
  static TermPtr sum(std::vector<TermPtr> children);
  static TermPtr product(std::vector<TermPtr> children);

  // "x1_1*x2_1 + #0" style; products bind tighter, sums are parenthesized
  // inside products.
  std::string to_string() const;
};

bool term_equal(const TermPtr& a, const TermPtr& b);

// Grammar (whitespace between tokens is free):
//   term := sum
//   sum  := prod ('+' prod)*
//   prod := atom ('*' atom)*
//   atom := 'x'INT'_'INT | '#'INT | '(' sum ')'
// arities[i] is the length of tuple i+1; x<i>_<j> with i or j out of range
// raises IndexError, malformed input raises ParseError with the offset.
TermPtr parse_term(const std::string& src, const std::vector<int>& arities);

// Distributes every product over sums until the term is a sum of monomials
// (products of variables and constants). Innermost products are expanded
// first and the resulting monomials are listed in leftmost-derivation order:
// (x+y)*(u+v) gives [x*u, x*v, y*u, y*v]. Worst-case output size is
// exponential in the nesting depth; inputs here are tiny. A constant or
// variable counts as a monomial of its own.
std::vector<TermPtr> normalize_to_monomials(const TermPtr& term);

// Groups a term mentions, ascending.
std::vector<int> touched_groups(const TermPtr& term);

// Evaluate with every variable bound: bound[g][c] is the element for
// Var{g,c}. Missing bindings raise IndexError, constants out of range too.
int evaluate(const TermPtr& term, const std::vector<std::vector<int>>& bound, const Semiring& s);

// A choice of tuples per group: the valuation v picks bound a[g] or b[g]
// for each group g according to choice bit g.
struct GroupBindings {
  std::vector<std::vector<int>> a, b;  // a.size() == b.size() == n groups

  int groups() const { return static_cast<int>(a.size()); }
  std::vector<std::vector<int>> select(unsigned choice_bits) const;
};

// Sums of m evaluated at all 2^n valuations, split by the parity of the
// number of groups where the b-tuple was chosen: first = even, second = odd.
// For a monomial touching fewer groups than there are, both sums agree.
// Requires n >= 2 and the monomial to touch k < n groups (ArityError).
std::pair<int, int> parity_sums(const TermPtr& monomial, const GroupBindings& bindings,
                                const Semiring& s);

// Same split for an arbitrary term; the term is normalized first and every
// monomial must individually touch k < n groups (HypothesisError otherwise).
std::pair<int, int> parity_sums_poly(const TermPtr& term, const GroupBindings& bindings,
                                     const Semiring& s);

}  // namespace nilsem

#endif
