#include <doctest.h>

#include "helpers.hpp"
#include "sigmapi/factor.hpp"
#include "sigmapi/oracle.hpp"
#include "sigmapi/types.hpp"

using namespace sigmapi;
using test::T;

namespace {
std::optional<Term> inj(const Term& f, int j) {
  auto r = factor_inj(annotate(f), j);
  return r ? std::optional<Term>(r->term()) : std::nullopt;
}
std::optional<Term> proj(const Term& f, int i) {
  auto r = factor_proj(annotate(f), i);
  return r ? std::optional<Term>(r->term()) : std::nullopt;
}
}  // namespace

TEST_CASE("factor through an injection") {
  Term t = test::term("{s1 !, s0 !}", "1+1", "1+1");
  CHECK(*inj(Term::inj(0, t, T("0")), 0) == t);

  Term f = test::term("p0 s0 ?", "0*1", "0+0");
  auto r = inj(f, 1);
  REQUIRE(r);
  CHECK(r->to_string() == "p0 ?");
  Universe u;
  CHECK(u.same_class(Term::inj(1, *r, T("0")), f));

  Term point = test::term("s1 !", "1", "0+1");
  CHECK_FALSE(inj(point, 0));
  for (const Term& g : u.enumerate(T("1"), T("0"))) CHECK_FALSE(u.same_class(Term::inj(0, g, T("1")), point));
}

TEST_CASE("factor through a projection") {
  Term t = test::term("{s1 !, s0 !}", "1+1", "1+1");
  CHECK(*proj(Term::proj(1, t, T("1")), 1) == t);

  Term f = Term::inj(0, Term::proj(0, t, T("1")), T("0"));
  auto r = proj(f, 0);
  REQUIRE(r);
  CHECK(*r == Term::inj(0, t, T("0")));
  Universe u;
  CHECK(u.same_class(Term::proj(0, *r, T("1")), f));

  Term c = test::term("p0 ?", "0*0", "0");
  CHECK_FALSE(proj(c, 1));
  CHECK_FALSE(u.same_class(c, test::term("p1 ?", "0*0", "0")));
}

TEST_CASE("factoring agrees with the oracle on small homsets") {
  // A factor exists iff some member of the image class has the right shape.
  Universe u;
  std::vector<ObjectType> small;
  for (std::size_t n : {1, 3}) for (const auto& t : types_of_size(n)) small.push_back(t);
  for (const auto& X : small) {
    for (const auto& A0 : small) {
      for (const auto& A1 : small) {
        ObjectType A = ObjectType::sum(A0, A1);
        if (u.summary(X, A).count > 2000) continue;
        for (int j = 0; j < 2; ++j) {
          std::vector<Term> lifts = u.enumerate(X, A.operand(j));
          for (const Term& f : u.enumerate(X, A)) {
            auto r = inj(f, j);
            bool exists = false;
            for (const Term& l : lifts) exists = exists || u.same_class(Term::inj(j, l, A.operand(1 - j)), f);
            CAPTURE(f.to_string());
            CAPTURE(j);
            CHECK(r.has_value() == exists);
            if (r) CHECK(u.same_class(Term::inj(j, *r, A.operand(1 - j)), f));
          }
        }
      }
    }
  }
}

TEST_CASE("factor visits stay within twice the size") {
  Universe u;
  for (const Term& f : u.enumerate(T("(0+1)*1"), T("(1+0)+(1*1)"))) {
    for (int k = 0; k < 2; ++k) {
      std::size_t a = 0, b = 0;
      factor_inj(annotate(f), k, &a);
      factor_proj(annotate(f), k, &b);
      CHECK(a <= 2 * f.size());
      CHECK(b <= 2 * f.size());
    }
  }
}

TEST_CASE("factor results are cached") {
  AnnotatedTerm f = annotate(test::term("s0 p0 {s1 !, s0 !}", "(1+1)*1", "(1+1)+0"));
  std::size_t first = 0, second = 0;
  auto a = factor_proj(f, 0, &first);
  auto b = factor_proj(f, 0, &second);
  CHECK(first > 0);
  CHECK(second == 0);
  REQUIRE(a);
  CHECK(a->node() == b->node());
}

TEST_CASE("factor rejects the wrong shape of homset") {
  CHECK_THROWS_AS(factor_inj(annotate(test::term("!", "1", "1")), 0), std::invalid_argument);
  CHECK_THROWS_AS(factor_proj(annotate(test::term("!", "1", "1")), 0), std::invalid_argument);
}
