#include <string>

#include "doctest.h"
#include "nilsem/algebra.hpp"
#include "nilsem/errors.hpp"
#include "nilsem/fixtures.hpp"
#include "nilsem/io.hpp"

using namespace nilsem;

namespace {

bool same_tables(const Semiring& a, const Semiring& b) {
  return a.order() == b.order() && a.zero() == b.zero() && a.add_table() == b.add_table() &&
         a.mul_table() == b.mul_table();
}

}  // namespace

TEST_CASE("text round trip is the identity and emit is a fixed point") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    std::string text = emit_semiring(s);
    Semiring back = parse_semiring(text);
    CHECK(same_tables(s, back));
    CHECK(emit_semiring(back) == text);  // canonical: emitting again is byte-stable
  }
}

TEST_CASE("json round trip preserves the tables") {
  for (const auto& [name, s] : all_fixtures()) {
    CAPTURE(name);
    std::string json = emit_semiring_json(s);
    Semiring back = parse_semiring(json);
    CHECK(same_tables(s, back));
  }
}

TEST_CASE("parser accepts the documented text shape") {
  Semiring s = parse_semiring("order 2\nzero 0\nadd\n0 1\n1 1\nmul\n0 0\n0 0\n");
  CHECK(s.order() == 2);
  CHECK(s.add(1, 1) == 1);
  CHECK(s.mul(1, 1) == 0);
}

TEST_CASE("parser tolerates extra whitespace and flat tables") {
  Semiring a = parse_semiring("order 2\nzero 0\nadd 0 1 1 1\nmul 0 0 0 0\n");
  Semiring b = parse_semiring("  order   2\n zero 0\n add\n  0 1\n  1 1\n mul\n 0 0\n 0 0");
  CHECK(same_tables(a, b));
}

TEST_CASE("format is auto-detected") {
  std::string json = R"({"order":2,"zero":0,"add":[[0,1],[1,1]],"mul":[[0,0],[0,0]]})";
  Semiring from_json = parse_semiring(json);
  Semiring from_text = parse_semiring("order 2\nzero 0\nadd\n0 1\n1 1\nmul\n0 0\n0 0\n");
  CHECK(same_tables(from_json, from_text));
}

TEST_CASE("parse errors carry a byte position") {
  try {
    parse_semiring("order 2\nzero 0\nadd\n0 x\n1 1\nmul\n0 0\n0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position > 0);
    CHECK(std::string(e.what()).find("integer") != std::string::npos);
  }
}

TEST_CASE("missing and duplicate fields are rejected") {
  CHECK_THROWS_AS(parse_semiring("order 2\nzero 0\nadd\n0 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_semiring("zero 0\nadd\n0 1\n1 1\nmul\n0 0\n0 0\n"), ParseError);
  CHECK_THROWS_AS(
      parse_semiring("order 2\norder 2\nzero 0\nadd\n0 1\n1 1\nmul\n0 0\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_semiring(""), ParseError);
  CHECK_THROWS_AS(parse_semiring("order 2\nzero 0\nwat\nadd\n0 1\n1 1\nmul\n0 0\n0 0\n"),
                  ParseError);
}

TEST_CASE("tables must match the declared order") {
  CHECK_THROWS_AS(parse_semiring("order 2\nzero 0\nadd\n0 1\n1 1 0\nmul\n0 0\n0 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_semiring("order 3\nzero 0\nadd\n0 1\n1 1\nmul\n0 0\n0 0\n"), ParseError);
}

TEST_CASE("axiom violations surface as AxiomError with the failing axiom") {
  try {
    // constant-one multiplication is associative but 0 does not absorb
    parse_semiring("order 2\nzero 0\nadd\n0 1\n1 0\nmul\n1 1\n1 1\n");
    FAIL("expected AxiomError");
  } catch (const AxiomError& e) {
    CHECK(e.violation.axiom == "absorbing-zero");
  }
}

TEST_CASE("entries outside the carrier are rejected") {
  CHECK_THROWS_AS(parse_semiring("order 2\nzero 0\nadd\n0 1\n1 2\nmul\n0 0\n0 0\n"),
                  DomainError);
  CHECK_THROWS_AS(parse_semiring("order 2\nzero 5\nadd\n0 1\n1 1\nmul\n0 0\n0 0\n"),
                  DomainError);
}

TEST_CASE("json parse errors are positioned and typed") {
  CHECK_THROWS_AS(parse_semiring("{\"order\": 2,"), ParseError);
  CHECK_THROWS_AS(parse_semiring("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_semiring(R"({"order":2,"zero":0,"add":[[0,1],[1,1]]})"), ParseError);
  CHECK_THROWS_AS(
      parse_semiring(R"({"order":2,"zero":0,"add":[[0,1],[1,1]],"mul":[[0,0],[0,0]],"x":1})"),
      ParseError);
}
