// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#ifndef PUISEUX_SEQUENCES_HPP
#define PUISEUX_SEQUENCES_HPP

#include <cstdint>

#include "puiseux/rat.hpp"

namespace puiseux {

// All sequence accessors are 1-based, memoized behind an internal lock,
// and behave as pure functions: safe to call from multiple threads.

/// n-th prime: 2, 3, 5, 7, ...
uint64_t nth_prime(std::size_t n);

/// n-th odd prime: 3, 5, 7, 11, ...
uint64_t nth_odd_prime(std::size_t n);

/// n-th prime greater than 3: 5, 7, 11, 13, ...
uint64_t nth_prime_gt3(std::size_t n);

/// 1-based position of p in the odd-prime sequence, or 0 if p is not an
/// odd prime.
std::size_t odd_prime_index(uint64_t p);

/// n-th odd integer greater than 1: 3, 5, 7, ...
Int nth_odd_gt1(std::size_t n);

/// Largest power of two strictly less than x; requires x >= 2.
Int ell2(const Int& x);

/// Deterministic bijective enumeration of the dyadic rationals > 1:
/// anti-diagonal sweep of 1 + j/2^k over (k, j), keeping only the
/// lowest-terms representative of each value.
Rat enumerate_dyadics_gt1(std::size_t n);

/// Inverse of enumerate_dyadics_gt1; throws if r is not a dyadic > 1.
std::size_t dyadic_gt1_index(const Rat& r);

/// n-th element of the pool P_l: the i-th odd prime belongs to P_l iff
/// i = 2^(l-1) * (2m - 1) for some m >= 1. The pools partition the odd
/// primes into pairwise disjoint infinite sets.
uint64_t partition_primes(int l, std::size_t n);

/// True iff the odd prime p belongs to pool P_l.
bool in_partition_pool(int l, uint64_t p);

}  // namespace puiseux

#endif  // PUISEUX_SEQUENCES_HPP
