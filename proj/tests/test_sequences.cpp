// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "puiseux/sequences.hpp"

using namespace puiseux;

TEST_CASE("prime stream golden values") {
  CHECK(nth_prime(1) == 2);
  CHECK(nth_prime(4) == 7);
  CHECK(nth_prime(1000) == 7919);
  CHECK(nth_prime(100000) == 1299709);
  CHECK(nth_odd_prime(1) == 3);
  CHECK(nth_odd_prime(4) == 11);
  CHECK(nth_prime_gt3(1) == 5);
  CHECK(odd_prime_index(3) == 1);
  CHECK(odd_prime_index(29) == 9);
  CHECK(odd_prime_index(4) == 0);
  CHECK(odd_prime_index(2) == 0);
}

TEST_CASE("odd numbers and largest power of two below") {
  CHECK(nth_odd_gt1(1) == 3);
  CHECK(nth_odd_gt1(5) == 11);
  CHECK(ell2(2) == 1);
  CHECK(ell2(3) == 2);
  CHECK(ell2(8) == 4);
  CHECK(ell2(9) == 8);
}

TEST_CASE("dyadic enumeration pinned values") {
  CHECK(enumerate_dyadics_gt1(1) == Rat(2));
  CHECK(enumerate_dyadics_gt1(3) == Rat(3, 2));
  CHECK(enumerate_dyadics_gt1(5) == Rat(5, 4));
}

TEST_CASE("dyadic enumeration is injective with a working inverse") {
  std::set<Rat> seen;
  for (std::size_t n = 1; n <= 10000; ++n) {
    Rat r = enumerate_dyadics_gt1(n);
    CHECK(r > Rat(1));
    CHECK((r.den() & (r.den() - 1)) == 0);  // power-of-two denominator
    CHECK(seen.insert(r).second);
    CHECK(dyadic_gt1_index(r) == n);
  }
  CHECK_THROWS_AS(dyadic_gt1_index(Rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(dyadic_gt1_index(Rat(4, 3)), std::invalid_argument);
}

TEST_CASE("dyadic enumeration covers (1,4] exhaustively") {
  // The anti-diagonal order reaches denominator-d values near 4 at index
  // about (3d)^2/4: denominator 8 inside the first 500 indices,
  // denominator 64 inside the first 10^4.
  std::set<Rat> early, full;
  for (std::size_t n = 1; n <= 10000; ++n) {
    Rat r = enumerate_dyadics_gt1(n);
    if (n <= 500) early.insert(r);
    full.insert(r);
  }
  for (Int den = 1; den <= 64; den *= 2)
    for (Int num = den + 1; num <= 4 * den; ++num) {
      Rat r(num, den);
      if (r.den() != den) continue;  // not in lowest terms with this den
      CAPTURE(r.str());
      CHECK(full.count(r) == 1);
      if (den <= 8) CHECK(early.count(r) == 1);
    }
}

TEST_CASE("partition pools are disjoint and correctly indexed") {
  // The i-th odd prime lands in pool l exactly when i = 2^(l-1)(2m-1).
  std::set<uint64_t> seen;
  for (int l = 1; l <= 4; ++l)
    for (std::size_t n = 1; n <= 50; ++n) {
      uint64_t p = partition_primes(l, n);
      CHECK(in_partition_pool(l, p));
      CHECK(seen.insert(p).second);
      std::size_t i = odd_prime_index(p);
      std::size_t q = i >> (l - 1);
      CHECK((i % (std::size_t(1) << (l - 1))) == 0);
      CHECK(q % 2 == 1);
    }
  // First pools: P_1 takes odd indices, P_2 indices 2 mod 4.
  CHECK(partition_primes(1, 1) == 3);
  CHECK(partition_primes(1, 2) == 7);
  CHECK(partition_primes(2, 1) == 5);
  CHECK(partition_primes(3, 1) == 11);  // odd-prime index 4
}
