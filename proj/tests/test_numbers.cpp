// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "puiseux/numbers.hpp"

using namespace puiseux;

TEST_CASE("primality spot checks") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7919));
  CHECK(is_prime(Int("1299709")));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));      // Carmichael
  CHECK_FALSE(is_prime(1299709L * 7919L));
}

TEST_CASE("valuation golden values") {
  CHECK(padic_valuation(Rat(12), 2) == Valuation::finite(2));
  CHECK(padic_valuation(Rat(5, 8), 2) == Valuation::finite(-3));
  CHECK(padic_valuation(Rat(9, 7), 3) == Valuation::finite(2));
  CHECK(padic_valuation(Rat(5, 7), 3) == Valuation::finite(0));
  CHECK(padic_valuation(Rat(0), 5).infinite);
}

TEST_CASE("ultrametric inequality on random pairs") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(-200, 200), e(1, 200);
  const Int ps[] = {2, 3, 5, 7};
  int checked = 0;
  for (int t = 0; t < 10000; ++t) {
    Rat x(d(rng), e(rng)), y(d(rng), e(rng));
    if (x.is_zero() || y.is_zero() || (x + y).is_zero()) continue;
    for (const Int& p : ps) {
      long vx = padic_valuation(x, p).value;
      long vy = padic_valuation(y, p).value;
      long vs = padic_valuation(x + y, p).value;
      CHECK(vs >= std::min(vx, vy));
      if (vx != vy) CHECK(vs == std::min(vx, vy));
    }
    ++checked;
  }
  CHECK(checked > 9000);
}

TEST_CASE("prime support and factorization") {
  CHECK(prime_support(Rat(5, 12)) == std::set<Int>{2, 3});
  CHECK(prime_support(Rat(7)) == std::set<Int>{});
  CHECK(prime_factors(360) == std::set<Int>{2, 3, 5});
  CHECK(prime_factors(1) == std::set<Int>{});
}

TEST_CASE("residues and modular inverses") {
  CHECK(residue_mod_p(Rat(10, 3), 7) == residue_mod_p(Rat(10) * Rat(5), 7));
  for (long a = 1; a < 13; ++a) {
    Int inv = mod_inverse(a, 13);
    CHECK((inv * a) % 13 == 1);
  }
  // v_p(q) >= 0 precondition: values in [0, p).
  Int r = residue_mod_p(Rat(22, 5), 3);
  CHECK(r >= 0);
  CHECK(r < 3);
}

TEST_CASE("support descriptors") {
  SupportSet a = SupportSet::finite({2, 3});
  SupportSet b = SupportSet::finite({3, 5});
  CHECK(a.symmetric_difference(b) == std::set<Int>{2, 5});
}
