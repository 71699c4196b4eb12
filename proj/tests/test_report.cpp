// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "puiseux/report.hpp"

using namespace puiseux;

TEST_CASE("crosscheck rejects the lex cone") {
  CHECK_THROWS_AS(crosscheck_family(Family::build(FamilyTag::LexCone), {}),
                  std::invalid_argument);
}

TEST_CASE("crosscheck of a small family grid is clean") {
  ReportConfig cfg;
  cfg.grid_numerator_max = 16;
  cfg.grid_pow2_max = 4;
  CrosscheckResult r =
      crosscheck_family(Family::build(FamilyTag::PowDenom, 3), cfg);
  CHECK(r.queries > 50);
  CHECK(r.disagreements == 0);
  CHECK_FALSE(r.first_counterexample.has_value());
}

TEST_CASE("claim suite is deterministic for a fixed config") {
  ReportDocument a = run_claim_suite({});
  ReportDocument b = run_claim_suite({});
  REQUIRE(a.claims.size() == b.claims.size());
  CHECK(a.all_passed());
  for (std::size_t i = 0; i < a.claims.size(); ++i) {
    CHECK(a.claims[i].id == b.claims[i].id);
    CHECK(a.claims[i].passed == b.claims[i].passed);
    CHECK(a.claims[i].evidence == b.claims[i].evidence);
  }
}
