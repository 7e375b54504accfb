#include <doctest.h>

#include "helpers.hpp"
#include "sigmapi/decide.hpp"
#include "sigmapi/oracle.hpp"
#include "sigmapi/types.hpp"

using namespace sigmapi;
using test::T;

TEST_CASE("the two projections 0*0 -> 0 differ") {
  Verdict v = equal(test::term("p0 ?", "0*0", "0"), test::term("p1 ?", "0*0", "0"));
  CHECK(v.outcome == Outcome::NotEqual);
  CHECK(v.reason == Reason::CornerMismatch);
  CHECK(v.to_string() == "NotEqual (corner-mismatch)");
}

TEST_CASE("after an injection into 0+1 they are equal through the disconnect") {
  Verdict v = equal(test::term("s0 p0 ?", "0*0", "0+1"), test::term("s0 p1 ?", "0*0", "0+1"));
  CHECK(v.outcome == Outcome::Equal);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == WitnessKind::Disconnect);
  CHECK(v.to_string() == "Equal (disconnect)");
}

TEST_CASE("reflexivity") {
  Term t = test::term("{<s0 !, p0 ?>, <s1 !, s1 !>}", "0*0+1", "(1+1)*(1+1)");
  CHECK(equal(t, t).equal());
}

TEST_CASE("distinct points of 1+1") {
  Term a = test::term("s0 !", "1*1", "1+1");
  Term b = test::term("s1 !", "1*1", "1+1");
  Verdict v = equal(a, b);
  CHECK(v.outcome == Outcome::NotEqual);
  CHECK(v.reason == Reason::PointMismatch);
  Universe u;
  CHECK_FALSE(u.same_class(a, b));
}

TEST_CASE("projection and injection commute through a bouncer") {
  Term t = test::term("{s1 !, s0 !}", "1+1", "1+1");
  Term f = Term::proj(0, Term::inj(0, t, T("0")), T("1"));
  Term g = Term::inj(0, Term::proj(0, t, T("1")), T("0"));
  Verdict v = equal(f, g);
  CHECK(v.outcome == Outcome::Equal);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == WitnessKind::Bouncer);
  CHECK(*v.witness->term == t);
}

TEST_CASE("equivalent finds the bouncer in Hom(X_i, A_j)") {
  AnnotatedTerm f = annotate(test::term("s0 p0 !", "1*0", "1+0"));
  AnnotatedTerm g = annotate(test::term("p0 s0 !", "1*0", "1+0"));
  Verdict v = equivalent(f, g);
  CHECK(v.outcome == Outcome::Equal);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == WitnessKind::Bouncer);
  const Term& h = *v.witness->term;
  CHECK(h.to_string() == "!");
  CHECK(h.dom() == T("1"));
  CHECK(h.cod() == T("1"));

  Universe u;
  auto hs = u.find_bouncers(test::term("p0 !", "1*0", "1"), test::term("s0 !", "1", "1+0"), 0, 0);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0] == h);
}

TEST_CASE("equivalent fails when a lift does not exist") {
  Term t = test::term("{s1 !, s0 !}", "1+1", "1+1");
  ObjectType S = T("1+1");
  Term f = Term::inj(0, Term::proj(0, t, S), S);
  Term g = Term::proj(0, Term::inj(1, t, S), S);
  Verdict v = equivalent(annotate(f), annotate(g));
  CHECK(v.outcome == Outcome::NotEqual);
  CHECK(v.reason == Reason::LiftFailure);
  Universe u;
  CHECK_FALSE(u.same_class(f, g));
}

TEST_CASE("equivalent checks the shapes") {
  AnnotatedTerm p = annotate(test::term("p0 s0 !", "1*0", "1+0"));
  CHECK_THROWS_AS(equivalent(p, p), std::invalid_argument);
}

TEST_CASE("decomposition reports the failing component") {
  Verdict v = equal(test::term("{s0 !, s0 !}", "1+1", "1+1"), test::term("{s0 !, s1 !}", "1+1", "1+1"));
  CHECK(v.outcome == Outcome::NotEqual);
  CHECK(v.components == std::vector<int>{1});
  CHECK(v.tag() == "component 1");
  CHECK(v.to_string() == "NotEqual (component 1: corner-mismatch)");
}

TEST_CASE("generators need the oracle") {
  GeneratorGraph g;
  g.add_node("x");
  g.add_node("a");
  g.add_edge("k", "x", "a");
  Term f = check_term(parse_term("s0 @k"), T("x"), T("a+1"), g);
  CHECK(equal(f, f).outcome == Outcome::RequiresOracle);
}

TEST_CASE("non-parallel terms are rejected") {
  CHECK_THROWS_AS(equal(test::term("!", "1", "1"), test::term("!", "0", "1")), std::invalid_argument);
}

TEST_CASE("monic injections and epic projections") {
  CHECK(injection_monic(T("1+1"), 0));
  CHECK(injection_monic(T("0+0"), 0));
  CHECK_FALSE(injection_monic(T("0+1"), 0));
  CHECK(injection_monic(T("0+1"), 1));
  CHECK(projection_epic(T("1*1"), 0));
  CHECK_FALSE(projection_epic(T("1*0"), 0));
}

TEST_CASE("agreement with the oracle and step counts on types of size at most 3") {
  Universe u;
  std::vector<ObjectType> types;
  for (std::size_t n : {1, 3}) for (const auto& t : types_of_size(n)) types.push_back(t);
  std::size_t worst = 0;
  for (const auto& X : types) {
    for (const auto& A : types) {
      std::vector<Term> ts = u.enumerate(X, A);
      for (const Term& f : ts) {
        for (const Term& g : ts) {
          DecideResult r = decide_with_stats(f, g);
          CHECK(r.verdict.equal() == u.same_class(f, g));
          worst = std::max(worst, r.stats.steps());
        }
        // reflexive pairs are never dearer than a pair of the same size
        std::size_t self = decide_with_stats(f, f).stats.steps();
        for (const Term& g : ts)
          if (g.size() == f.size()) CHECK(self <= decide_with_stats(f, g).stats.steps() + 1);
      }
    }
  }
  CHECK(worst <= 200);
}
