#include <doctest.h>

#include "helpers.hpp"
#include "sigmapi/terms.hpp"

using namespace sigmapi;
using test::T;

TEST_CASE("infer types cut-free terms") {
  RawTerm p = infer(RawTerm::proj(0, RawTerm::quest()), T("0*0"), T("0"));
  REQUIRE(p.typed());
  CHECK(*p.dom == T("0*0"));
  CHECK(*p.children[0].dom == T("0"));
  CHECK(to_term(p).to_string() == "p0 ?");

  RawTerm s = infer(RawTerm::inj(0, RawTerm::bang()), T("1"), T("1+1"));
  CHECK(*s.children[0].cod == T("1"));
  CHECK(to_term(s) == Term::inj(0, Term::bang(T("1")), T("1")));
}

TEST_CASE("infer rejects ill-typed terms with a location") {
  CHECK_THROWS_AS(infer(RawTerm::bang(), T("1"), T("0")), TypingException);
  try {
    infer(parse_term("<!, p0 !>"), T("1"), T("1*1"));
    FAIL("expected a typing error");
  } catch (const TypingException& e) {
    CHECK(e.error().location == std::vector<int>{1});
    CHECK(e.error().location_string() == "root.1");
    CHECK(e.error().pos.column == 5);
  }
}

TEST_CASE("infer solves the middle object of a cut or asks for it") {
  RawTerm ok = infer(parse_term("<!, s0 !> ; p1 id:(1+1)"), T("1"), T("1+1"));
  CHECK(*ok.children[0].cod == T("1*(1+1)"));
  CHECK_THROWS_AS(infer(parse_term("s0 ! ; {!, !}"), T("1"), T("1")), TypingException);
  CHECK_THROWS_AS(infer(parse_term("s0 ! ; !"), T("1"), T("1")), TypingException);
  CHECK_NOTHROW(infer(parse_term("! ; id:1 ; !"), T("1"), T("1")));
}

TEST_CASE("term metrics") {
  CHECK(term_metrics(Term::bang(T("1"))) == TypeMetrics{1, 1});
  CHECK(term_metrics(Term::inj(0, Term::bang(T("1")), T("1"))) == TypeMetrics{2, 2});
  Term t = Term::tuple(Term::quest(T("1")), Term::quest(T("1")));
  CHECK(t.dom() == T("0"));
  CHECK(term_metrics(t) == TypeMetrics{3, 2});
}

TEST_CASE("parse and print") {
  CHECK(parse_term("p0 ?") == RawTerm::proj(0, RawTerm::quest()));
  CHECK(parse_term("<! , s1 !>") == RawTerm::tuple(RawTerm::bang(), RawTerm::inj(1, RawTerm::bang())));
  CHECK(Term::cotuple(Term::bang(T("1")), Term::bang(T("1"))).to_string() == "{!, !}");
  CHECK(parse_term("@[k, m]") == RawTerm::gen({"k", "m"}));
  CHECK(parse_term("id:(1+1) ; s0 !").to_string() == "id:(1 + 1) ; s0 !");
}

TEST_CASE("constructors check homsets") {
  CHECK_THROWS_AS(Term::tuple(Term::bang(T("1")), Term::bang(T("0"))), std::invalid_argument);
  CHECK_THROWS_AS(Term::cotuple(Term::bang(T("1")), Term::quest(T("0"))), std::invalid_argument);
}

TEST_CASE("structural equality compares homsets too") {
  CHECK(Term::bang(T("1")) == Term::bang(T("1")));
  CHECK(Term::bang(T("1")) != Term::bang(T("0")));
  CHECK(Term::quest(T("1")) != Term::quest(T("0")));
  Term a = Term::gen_arrow({"k"}, T("x"), T("a"));
  CHECK(a == Term::gen_arrow({"k"}, T("x"), T("a")));
  CHECK(a.has_generators());
}

TEST_CASE("generator paths are checked against the graph") {
  GeneratorGraph g;
  g.add_node("x");
  g.add_node("a");
  g.add_edge("k", "x", "a");
  CHECK_NOTHROW(infer(parse_term("@k"), T("x"), T("a"), g));
  CHECK_NOTHROW(infer(parse_term("@[]"), T("x"), T("x"), g));
  CHECK_THROWS_AS(infer(parse_term("@k"), T("a"), T("x"), g), TypingException);
  CHECK_THROWS_AS(check_generators(T("y"), g), TypingException);
}
