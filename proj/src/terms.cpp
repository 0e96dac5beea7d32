#include "nilsem/terms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace nilsem {

namespace {

// Splice children of the same kind so sums of sums and products of products
// stay flat; keep a lone child as the node itself.
std::vector<TermPtr> flatten(Term::Kind kind, std::vector<TermPtr> children) {
  std::vector<TermPtr> flat;
  for (TermPtr& c : children) {
    if (!c) throw DomainError("null subterm");
    if (c->kind == kind)
      flat.insert(flat.end(), c->children.begin(), c->children.end());
    else
      flat.push_back(std::move(c));
  }
  return flat;
}

TermPtr make_nary(Term::Kind kind, std::vector<TermPtr> children) {
  std::vector<TermPtr> flat = flatten(kind, std::move(children));
  if (flat.empty()) throw DomainError("empty sum or product");
  if (flat.size() == 1) return flat[0];
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->children = std::move(flat);
  return t;
}

}  // namespace

TermPtr Term::var(int group, int component) {
  if (group < 0 || component < 0) throw IndexError("variable indices must be nonnegative");
  auto t = std::make_shared<Term>();
  t->kind = Kind::Var;
  t->group = group;
  t->component = component;
  return t;
}

TermPtr Term::constant(int value) {
  if (value < 0) throw IndexError("constant must name a nonnegative element index");
  auto t = std::make_shared<Term>();
  t->kind = Kind::Const;
  t->value = value;
  return t;
}

TermPtr Term::sum(std::vector<TermPtr> children) { return make_nary(Kind::Sum, std::move(children)); }

TermPtr Term::product(std::vector<TermPtr> children) {
  return make_nary(Kind::Product, std::move(children));
}

std::string Term::to_string() const {
  switch (kind) {
    case Kind::Var:
      return "x" + std::to_string(group + 1) + "_" + std::to_string(component + 1);
    case Kind::Const:
      return "#" + std::to_string(value);
    case Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += " + ";
        s += children[i]->to_string();
      }
      return s;
    }
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += "*";
        bool parens = children[i]->kind == Kind::Sum;
        s += parens ? "(" + children[i]->to_string() + ")" : children[i]->to_string();
      }
      return s;
    }
  }
  return "";
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var:
      return a->group == b->group && a->component == b->component;
    case Term::Kind::Const:
      return a->value == b->value;
    default:
      if (a->children.size() != b->children.size()) return false;
      for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!term_equal(a->children[i], b->children[i])) return false;
      return true;
  }
}

namespace {

struct TermParser {
  const std::string& src;
  const std::vector<int>& arities;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_space();
    return pos < src.size() && src[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  int integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a number", pos);
    return std::stoi(src.substr(start, pos - start));
  }

  TermPtr parse_sum() {
    std::vector<TermPtr> parts{parse_prod()};
    while (eat('+')) parts.push_back(parse_prod());
    return Term::sum(std::move(parts));
  }
  TermPtr parse_prod() {
    std::vector<TermPtr> parts{parse_atom()};
    while (eat('*')) parts.push_back(parse_atom());
    return Term::product(std::move(parts));
  }
  TermPtr parse_atom() {
    skip_space();
    if (pos >= src.size()) throw ParseError("unexpected end of term", pos);
    if (eat('(')) {
      TermPtr inner = parse_sum();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return inner;
    }
    if (eat('#')) return Term::constant(integer());
    if (src[pos] == 'x') {
      std::size_t at = pos;
      ++pos;
      int group = integer();
      if (pos >= src.size() || src[pos] != '_') throw ParseError("expected '_'", pos);
      ++pos;
      int component = integer();
      if (group < 1 || group > static_cast<int>(arities.size()))
        throw IndexError("variable x" + std::to_string(group) + "_" +
                         std::to_string(component) + " names a missing tuple (offset " +
                         std::to_string(at) + ")");
      if (component < 1 || component > arities[group - 1])
        throw IndexError("variable x" + std::to_string(group) + "_" +
                         std::to_string(component) + " exceeds the tuple arity " +
                         std::to_string(arities[group - 1]) + " (offset " + std::to_string(at) +
                         ")");
      return Term::var(group - 1, component - 1);
    }
    throw ParseError(std::string("unexpected character '") + src[pos] + "'", pos);
  }
};

}  // namespace

TermPtr parse_term(const std::string& src, const std::vector<int>& arities) {
  TermParser p{src, arities};
  TermPtr t = p.parse_sum();
  p.skip_space();
  if (p.pos != src.size()) throw ParseError("trailing input after term", p.pos);
  return t;
}

std::vector<TermPtr> normalize_to_monomials(const TermPtr& term) {
  if (!term) throw DomainError("null term");
  switch (term->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return {term};
    case Term::Kind::Sum: {
      std::vector<TermPtr> out;
      for (const TermPtr& c : term->children) {
        auto part = normalize_to_monomials(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case Term::Kind::Product: {
      // Expand every factor first (innermost products disappear), then take
      // the cartesian product with the leftmost factor varying slowest.
      std::vector<std::vector<TermPtr>> factor_monomials;
      for (const TermPtr& f : term->children)
        factor_monomials.push_back(normalize_to_monomials(f));
      std::vector<TermPtr> out;
      std::vector<std::size_t> pick(factor_monomials.size(), 0);
      while (true) {
        std::vector<TermPtr> factors;
        for (std::size_t i = 0; i < pick.size(); ++i)
          factors.push_back(factor_monomials[i][pick[i]]);
        out.push_back(Term::product(std::move(factors)));
        int i = static_cast<int>(pick.size()) - 1;
        while (i >= 0 && ++pick[i] == factor_monomials[i].size()) pick[i--] = 0;
        if (i < 0) break;
      }
      return out;
    }
  }
  return {};
}

std::vector<int> touched_groups(const TermPtr& term) {
  std::set<int> groups;
  std::vector<const Term*> stack{term.get()};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    if (t->kind == Term::Kind::Var) groups.insert(t->group);
    for (const TermPtr& c : t->children) stack.push_back(c.get());
  }
  return std::vector<int>(groups.begin(), groups.end());
}

int evaluate(const TermPtr& term, const std::vector<std::vector<int>>& bound, const Semiring& s) {
  switch (term->kind) {
    case Term::Kind::Var: {
      if (term->group >= static_cast<int>(bound.size()))
        throw IndexError("no tuple bound for group " + std::to_string(term->group + 1));
      const auto& tuple = bound[term->group];
      if (term->component >= static_cast<int>(tuple.size()))
        throw IndexError("tuple for group " + std::to_string(term->group + 1) +
                         " is shorter than component " + std::to_string(term->component + 1));
      int v = tuple[term->component];
      if (v < 0 || v >= s.order()) throw IndexError("bound element out of range");
      return v;
    }
    case Term::Kind::Const:
      if (term->value >= s.order())
        throw IndexError("constant #" + std::to_string(term->value) + " exceeds the order");
      return term->value;
    case Term::Kind::Sum: {
      int acc = evaluate(term->children[0], bound, s);
      for (std::size_t i = 1; i < term->children.size(); ++i)
        acc = s.add(acc, evaluate(term->children[i], bound, s));
      return acc;
    }
    case Term::Kind::Product: {
      int acc = evaluate(term->children[0], bound, s);
      for (std::size_t i = 1; i < term->children.size(); ++i)
        acc = s.mul(acc, evaluate(term->children[i], bound, s));
      return acc;
    }
  }
  throw InternalError("unreachable term kind");
}

std::vector<std::vector<int>> GroupBindings::select(unsigned choice_bits) const {
  std::vector<std::vector<int>> bound(a.size());
  for (std::size_t g = 0; g < a.size(); ++g)
    bound[g] = (choice_bits >> g & 1u) ? b[g] : a[g];
  return bound;
}

namespace {

std::pair<int, int> valuation_parity_sums(const TermPtr& term, const GroupBindings& bindings,
                                          const Semiring& s) {
  const int n = bindings.groups();
  int even = -1, odd = -1;
  for (unsigned v = 0; v < (1u << n); ++v) {
    int e = evaluate(term, bindings.select(v), s);
    int& acc = (std::popcount(v) & 1) ? odd : even;
    acc = acc == -1 ? e : s.add(acc, e);
  }
  return {even, odd};
}

void check_bindings(const GroupBindings& bindings) {
  if (bindings.a.size() != bindings.b.size())
    throw ArityError("bindings must pair one a-tuple with one b-tuple per group");
  for (std::size_t g = 0; g < bindings.a.size(); ++g)
    if (bindings.a[g].size() != bindings.b[g].size())
      throw ArityError("a-tuple and b-tuple of group " + std::to_string(g + 1) +
                       " differ in length");
}

}  // namespace

std::pair<int, int> parity_sums(const TermPtr& monomial, const GroupBindings& bindings,
                                const Semiring& s) {
  check_bindings(bindings);
  const int n = bindings.groups();
  if (n < 2) throw ArityError("parity sums need at least two groups");
  if (touched_groups(monomial).size() >= static_cast<std::size_t>(n))
    throw ArityError("monomial touches every group; the parity identity does not apply");
  return valuation_parity_sums(monomial, bindings, s);
}

std::pair<int, int> parity_sums_poly(const TermPtr& term, const GroupBindings& bindings,
                                     const Semiring& s) {
  check_bindings(bindings);
  const int n = bindings.groups();
  if (n < 2) throw ArityError("parity sums need at least two groups");
  for (const TermPtr& m : normalize_to_monomials(term))
    if (touched_groups(m).size() >= static_cast<std::size_t>(n))
      throw HypothesisError("monomial " + m->to_string() + " touches every group");
  return valuation_parity_sums(term, bindings, s);
}

}  // namespace nilsem
