#include <doctest.h>

#include "helpers.hpp"
#include "sigmapi/syntax.hpp"

using namespace sigmapi;
using test::T;

TEST_CASE("type precedence") {
  CHECK(T("1+1*0") == ObjectType::sum(ObjectType::one(), ObjectType::prod(ObjectType::one(), ObjectType::zero())));
  CHECK(T("1*1*1") == T("1*(1*1)"));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_type("1 + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 1);
    CHECK(e.pos().column == 5);
  }
  CHECK_THROWS_AS(parse_type("2"), ParseError);
  CHECK_THROWS_AS(parse_term("p2 !"), ParseError);
  CHECK_THROWS_AS(parse_term("<!, !"), ParseError);
}

TEST_CASE("modules with a graph and declarations") {
  Module m = parse_module(R"(
    # comment
    graph { node x; node a; edge k : x -> a; }
    term f : x -> a + 1 = s0 @k ;
    term g : x -> a = @k ; @[] ;
  )");
  CHECK(m.graph.has_node("x"));
  REQUIRE(m.terms.size() == 2);
  REQUIRE(m.find("g"));
  CHECK(m.find("g")->body.kind == RawKind::Cut);
  CHECK(m.find("f")->cod == T("a+1"));
  CHECK(m.find("h") == nullptr);
}

TEST_CASE("module errors") {
  CHECK_THROWS_AS(parse_module("term f : 1 -> 1 = ! ; term f : 1 -> 1 = ! ;"), ParseError);
  CHECK_THROWS_AS(parse_module("graph { edge k : x -> y; }"), ParseError);
  CHECK_THROWS_AS(parse_module("term f : 1 -> 1 ! ;"), ParseError);
  CHECK_THROWS_AS(load_module("/nonexistent/file.spt"), std::runtime_error);
}

TEST_CASE("data files parse") {
  for (const char* f : {"intro.spt", "bouncer.spt", "bad.spt", "laws.spt"}) {
    CAPTURE(f);
    CHECK_NOTHROW(load_module(test::data(f)));
  }
}
