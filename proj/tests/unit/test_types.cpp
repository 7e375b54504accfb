#include <doctest.h>

#include "helpers.hpp"
#include "sigmapi/oracle.hpp"
#include "sigmapi/types.hpp"

using namespace sigmapi;
using test::T;

TEST_CASE("metrics of small types") {
  CHECK(metrics(T("0")) == TypeMetrics{1, 1});
  CHECK(metrics(T("0*0")) == TypeMetrics{3, 2});
  CHECK(metrics(T("(1+1)*1")) == TypeMetrics{5, 3});
  CHECK(metrics(T("x")) == TypeMetrics{1, 1});
}

TEST_CASE("pointed and copointed predicates agree with the homsets into and out of them") {
  Universe u;
  auto has_point = [&](const ObjectType& t) { return u.summary(ObjectType::one(), t).count > 0; };
  auto has_copoint = [&](const ObjectType& t) { return u.summary(t, ObjectType::zero()).count > 0; };

  CHECK(type_pointed(T("1")));
  CHECK(type_pointed(T("0+1")));
  CHECK(has_point(T("0+1")));
  CHECK(type_copointed(T("0")));
  CHECK(type_copointed(T("0*1")));
  CHECK(has_copoint(T("0*1")));
  CHECK_FALSE(type_copointed(T("1")));
  CHECK_FALSE(has_copoint(T("1")));
}

TEST_CASE("generators are neither pointed nor copointed") {
  GeneratorGraph g;
  g.add_node("x");
  Universe u(g);
  CHECK_FALSE(type_pointed(T("x")));
  CHECK_FALSE(type_copointed(T("x")));
  CHECK(u.enumerate(T("1"), T("x")).empty());
  CHECK(u.enumerate(T("x"), T("0")).empty());
}

TEST_CASE("types_of_size counts") {
  CHECK(types_of_size(1).size() == 2);
  CHECK(types_of_size(2).empty());
  CHECK(types_of_size(3).size() == 8);
  CHECK(types_of_size(5).size() == 64);
  CHECK(types_of_size(7).size() == 640);
  for (const auto& t : types_of_size(5)) CHECK(t.size() == 5);
}

TEST_CASE("printing and parsing round trip") {
  for (std::size_t n : {1, 3, 5}) {
    for (const auto& t : types_of_size(n)) {
      CHECK(parse_type(t.to_string()) == t);
    }
  }
  CHECK(T("1+1*0").to_string() == "1 + 1 * 0");
  CHECK(T("(1+1)*0").to_string() == "(1 + 1) * 0");
  CHECK(T("1+0+1") == T("1+(0+1)"));
}

TEST_CASE("structural equality and hashing") {
  CHECK(T("1*0") == ObjectType::prod(ObjectType::one(), ObjectType::zero()));
  CHECK(T("1*0") != T("0*1"));
  CHECK(T("1*0").hash() == ObjectType::prod(ObjectType::one(), ObjectType::zero()).hash());
}
