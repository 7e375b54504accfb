#include <doctest.h>

#include "helpers.hpp"
#include "sigmapi/compose.hpp"
#include "sigmapi/oracle.hpp"

using namespace sigmapi;
using test::T;

namespace {
Term elim(const std::string& text, const std::string& dom, const std::string& cod) {
  return eliminate(infer(parse_term(text), T(dom), T(cod)));
}
}  // namespace

TEST_CASE("product beta") {
  Term t = elim("<s0 !, s1 !> ; id:((1+1)*(1+1)) ; p1 id:(1+1)", "1", "1+1");
  CHECK(t == test::term("s1 !", "1", "1+1"));
}

TEST_CASE("coproduct beta") {
  Term t = elim("s0 ! ; id:(1+1) ; {s1 !, s0 !}", "1", "1+1");
  CHECK(t == elim("! ; s1 !", "1", "1+1"));
  CHECK(t.to_string() == "s1 !");
}

TEST_CASE("cut into an injection commutes with it") {
  Term t = elim("p0 ? ; s0 id:0", "0*0", "0+1");
  CHECK(t.to_string() == "s0 p0 ?");
  Universe u;
  CHECK(u.same_class(t, test::term("p0 s0 ?", "0*0", "0+1")));
}

TEST_CASE("identity expansion") {
  CHECK(identity(T("1")).to_string() == "!");
  CHECK(identity(T("0")).to_string() == "?");
  Term id01 = identity(T("0+1"));
  CHECK(id01.to_string() == "{?, s1 !}");
  Universe u;
  CHECK(u.same_class(id01, test::term("{s0 ?, s1 !}", "0+1", "0+1")));
  CHECK(identity(T("x")).to_string() == "@[]");
  CHECK(identity(T("1*1")).to_string() == "<!, !>");
  CHECK(identity(T("(1+1)*1")).to_string() == "<p0 {s0 !, s1 !}, !>");
}

TEST_CASE("compose checks the middle object") {
  Term f = test::term("s0 !", "1", "1+1");
  CHECK_THROWS_AS(compose(f, f), std::invalid_argument);
  Term swap = test::term("{s1 !, s0 !}", "1+1", "1+1");
  CHECK(compose(swap, swap) == identity(T("1+1")));
  CHECK(compose(f, swap).to_string() == "s1 !");
}

TEST_CASE("units") {
  CHECK(elim("? ; id:1 ; s0 !", "0", "1+1").to_string() == "?");
  CHECK(elim("s0 ! ; id:(1+1) ; !", "1", "1").to_string() == "!");
}

TEST_CASE("generators compose by concatenation") {
  GeneratorGraph g;
  g.add_node("x");
  g.add_node("y");
  g.add_node("z");
  g.add_edge("k", "x", "y");
  g.add_edge("m", "y", "z");
  Term t = check_term(parse_term("@k ; @m"), T("x"), T("z"), g);
  CHECK(t.to_string() == "@[k, m]");
  Term e = check_term(parse_term("@[] ; @k"), T("x"), T("y"), g);
  CHECK(e.to_string() == "@k");
  Term s = check_term(parse_term("s0 @k ; id:(y + 0*0) ; {@m, p0 ?}"), T("x"), T("z"), g);
  CHECK(s.to_string() == "@[k, m]");
}

TEST_CASE("eliminate leaves no cut behind and keeps the homset") {
  Module m = load_module(test::data("laws.spt"));
  for (const auto& d : m.terms) {
    CAPTURE(d.name);
    Term t = check_term(d.body, d.dom, d.cod, m.graph);
    CHECK(t.dom() == d.dom);
    CHECK(t.cod() == d.cod);
    CHECK(RawTerm::from(t).cut_free());
  }
}
