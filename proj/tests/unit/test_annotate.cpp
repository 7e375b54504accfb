#include <doctest.h>

#include "helpers.hpp"
#include "sigmapi/annotate.hpp"
#include "sigmapi/compose.hpp"
#include "sigmapi/oracle.hpp"
#include "sigmapi/types.hpp"

using namespace sigmapi;
using test::T;

TEST_CASE("a disconnect is pointed and copointed") {
  Term t = test::term("s1 !", "0*0", "0+1");
  AnnotatedTerm a = annotate(t);
  CHECK(a.pointed());
  CHECK(a.copointed());
  REQUIRE(a.annotation().point_witness);
  REQUIRE(a.annotation().copoint_witness);
  CHECK(a.annotation().point_witness->to_string() == "s1 !");
  CHECK(a.annotation().copoint_witness->to_string() == "p0 ?");

  Universe u;
  Term via_point = compose(Term::bang(T("0*0")), *a.annotation().point_witness);
  Term via_copoint = compose(*a.annotation().copoint_witness, Term::quest(T("0+1")));
  CHECK(u.same_class(via_point, t));
  CHECK(u.same_class(via_copoint, t));
}

TEST_CASE("a copoint is its own witness") {
  AnnotatedTerm a = annotate(test::term("p0 ?", "0*0", "0"));
  CHECK_FALSE(a.pointed());
  CHECK(a.copointed());
  CHECK(a.annotation().copoint_witness->to_string() == "p0 ?");
}

TEST_CASE("an injection of a point out of 1*1 is only pointed") {
  Term t = test::term("s0 !", "1*1", "1+1");
  AnnotatedTerm a = annotate(t);
  CHECK(a.pointed());
  CHECK_FALSE(a.copointed());
  CHECK(a.annotation().point_witness->to_string() == "s0 !");
  CHECK(a.annotation().point_witness->dom() == T("1"));
  CHECK_FALSE(type_copointed(T("1*1")));
}

TEST_CASE("disconnect") {
  auto d = disconnect(T("0*0"), T("1+1"));
  REQUIRE(d);
  CHECK(d->to_string() == "p0 ?");
  AnnotatedTerm a = annotate(*d);
  CHECK(a.pointed());
  CHECK(a.copointed());
  Universe u;
  CHECK(u.same_class(*d, test::term("p0 s0 ?", "0*0", "1+1")));
  CHECK_FALSE(disconnect(T("1"), T("1+1")));
  auto z = disconnect(T("0"), T("1"));
  REQUIRE(z);
  CHECK(z->to_string() == "?");
  CHECK(u.same_class(*z, Term::bang(T("0"))));
}

TEST_CASE("points and copoints of types") {
  CHECK(point_of(T("1+1"))->to_string() == "s0 !");
  CHECK_FALSE(point_of(T("0")));
  CHECK(copoint_of(T("0*1"))->to_string() == "p0 ?");
  CHECK(copoint_of(T("1*0"))->to_string() == "p1 ?");
  CHECK(point_of(T("0+1"))->to_string() == "s1 !");
  CHECK_FALSE(point_of(T("x")));
}

TEST_CASE("annotation bits match the oracle on every small homset") {
  // f is pointed iff it equals some ! ; p, copointed iff some c ; ?.
  Universe u;
  std::vector<ObjectType> types;
  for (std::size_t n : {1, 3}) for (const auto& t : types_of_size(n)) types.push_back(t);
  for (const auto& X : types) {
    for (const auto& A : types) {
      std::vector<Term> points = u.enumerate(T("1"), A);
      std::vector<Term> copoints = u.enumerate(X, T("0"));
      for (const Term& f : u.enumerate(X, A)) {
        CAPTURE(f.to_string());
        bool pointed = false, copointed = false;
        for (const Term& p : points) pointed = pointed || u.same_class(compose(Term::bang(X), p), f);
        for (const Term& c : copoints) copointed = copointed || u.same_class(compose(c, Term::quest(A)), f);
        AnnotatedTerm a = annotate(f);
        CHECK(a.pointed() == pointed);
        CHECK(a.copointed() == copointed);
        if (a.pointed()) CHECK(u.same_class(compose(Term::bang(X), *a.annotation().point_witness), f));
        if (a.copointed()) CHECK(u.same_class(compose(*a.annotation().copoint_witness, Term::quest(A)), f));
      }
    }
  }
}

TEST_CASE("annotate visits every node once") {
  Term t = test::term("{<p0 ?, s0 !>, <s1 !, s1 !>}", "0*0+1", "(1+1)*(1+1)");
  std::size_t visits = 0;
  annotate(t, &visits);
  CHECK(visits == t.size());
}

TEST_CASE("the annotation cache shares subterms") {
  AnnotationCache cache;
  Term b = test::term("s0 !", "1", "1+1");
  Term t = Term::tuple(b, b);
  AnnotatedTerm a = cache.get(t);
  CHECK(a.child(0).node() == a.child(1).node());
  CHECK(cache.get(b).node() == a.child(0).node());
}
