// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "puiseux/fg.hpp"

using namespace puiseux;

TEST_CASE("parse, sort, dedupe, print") {
  FgPresentation p = FgPresentation::parse("fg:1/3,1/2,2/6,5/6");
  CHECK(p.generators() == std::vector<Rat>{Rat(1, 3), Rat(1, 2), Rat(5, 6)});
  CHECK(p.str() == "fg:1/3,1/2,5/6");
  CHECK_THROWS_AS(FgPresentation::parse("fg:"), std::invalid_argument);
  CHECK_THROWS_AS(FgPresentation::parse("1/2"), std::invalid_argument);
  CHECK_THROWS_AS(FgPresentation({Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(FgPresentation({Rat(-1, 2)}), std::invalid_argument);
}

TEST_CASE("membership with certificates that re-sum") {
  FgPresentation p = FgPresentation::parse("fg:1/2,1/3");
  MembershipResult r = p.member(Rat(7, 6));
  REQUIRE(r.is_member());
  CHECK(r.certificate->sum() == Rat(7, 6));
  CHECK(p.member(Rat(7, 12)).is_nonmember());
  CHECK(p.member(Rat(1, 6)).is_nonmember());
  CHECK(p.member(Rat(0)).is_member());
  CHECK(p.member(Rat(-1, 2)).is_nonmember());
}

TEST_CASE("monoid closure on random certified members") {
  FgPresentation p = FgPresentation::parse("fg:1/2,2/3,5/6");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(0, 6);
  for (int t = 0; t < 300; ++t) {
    Rat x = Rat(c(rng), 2) + Rat(2 * c(rng), 3) + Rat(5 * c(rng), 6);
    Rat y = Rat(c(rng), 2) + Rat(2 * c(rng), 3) + Rat(5 * c(rng), 6);
    MembershipResult r = p.member(x + y);
    REQUIRE(r.is_member());
    CHECK(r.certificate->sum() == x + y);
  }
}

TEST_CASE("atoms of a small presentation") {
  FgPresentation p = FgPresentation::parse("fg:1/2,1/3,5/6");
  // 5/6 = 1/2 + 1/3 decomposes; the unit fractions do not.
  CHECK(p.atoms() == std::vector<Rat>{Rat(1, 3), Rat(1, 2)});
  FgPresentation cyc = FgPresentation::parse("fg:1/4,1/2,3/4");
  CHECK(cyc.atoms() == std::vector<Rat>{Rat(1, 4)});
}

TEST_CASE("divisibility relative to the presentation") {
  FgPresentation p = FgPresentation::parse("fg:1/2,1/3");
  CHECK(p.divides(Rat(1, 2), Rat(5, 6)).is_member());
  CHECK(p.divides(Rat(1, 3), Rat(1, 2)).is_nonmember());
  CHECK_THROWS_AS(p.divides(Rat(1, 6), Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("cyclic detection") {
  Rat w;
  CHECK(FgPresentation::parse("fg:1/4,1/2,3/4").is_cyclic(&w));
  CHECK(w == Rat(1, 4));
  CHECK_FALSE(FgPresentation::parse("fg:1/2,1/3").is_cyclic());
}

TEST_CASE("DFS fallback beyond the DP budget stays sound") {
  // Large scaled targets route through the coefficient-bounded search.
  FgPresentation p = FgPresentation::parse("fg:1/2,1/729,1/1024");
  FgSearchOptions opts;
  opts.dp_target_limit = 10;  // force the fallback
  MembershipResult r = p.member(Rat(3, 2) + Rat(5, 729), opts);
  REQUIRE(r.is_member());
  CHECK(r.certificate->sum() == Rat(3, 2) + Rat(5, 729));
  CHECK(p.member(Rat(1, 7), opts).is_nonmember());
}
