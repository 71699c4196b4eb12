// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "puiseux/rat.hpp"

using namespace puiseux;

TEST_CASE("canonical lowest terms with positive denominator") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(0).den() == 1);
  CHECK(Rat(-6, -4) == Rat(3, 2));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rat::parse("7/12") == Rat(7, 12));
  CHECK(Rat::parse("-3/9") == Rat(-1, 3));
  CHECK(Rat::parse("5") == Rat(5));
  CHECK(Rat::parse("10/4").str() == "5/2");
  CHECK(Rat::parse("4/2").str() == "2");
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
}

TEST_CASE("field laws on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50), e(1, 50);
  for (int t = 0; t < 2000; ++t) {
    Rat a(d(rng), e(rng)), b(d(rng), e(rng)), c(d(rng), e(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("ordering is total and consistent with subtraction") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(0));
  CHECK(Rat(5, 10) == Rat(1, 2));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-30, 30), e(1, 30);
  for (int t = 0; t < 2000; ++t) {
    Rat a(d(rng), e(rng)), b(d(rng), e(rng));
    CHECK((a < b) == (a - b).is_negative());
  }
}

TEST_CASE("floor of a rational") {
  CHECK(floor_int(Rat(7, 2)) == 3);
  CHECK(floor_int(Rat(-7, 2)) == -4);
  CHECK(floor_int(Rat(6, 3)) == 2);
  CHECK(floor_int(Rat(0)) == 0);
}
