// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#include "puiseux/sequences.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "puiseux/numbers.hpp"

namespace puiseux {

namespace {

std::mutex g_prime_mutex;
std::vector<uint64_t> g_primes = {2, 3, 5, 7, 11, 13};
std::map<uint64_t, std::size_t> g_prime_index;  // prime -> 1-based index

// Segmented sieve over odd blocks: the family constructions pull pool
// primes past 10^7, where per-candidate trial division stops scaling.
void grow_primes_locked(std::size_t count) {
  while (g_primes.size() < count) {
    uint64_t lo = g_primes.back() + 2;
    uint64_t hi = lo + std::max<uint64_t>(1 << 20, lo / 4);
    std::vector<bool> composite((hi - lo) / 2 + 1, false);
    for (uint64_t p = 3; p * p <= hi; p += 2) {
      bool prime = true;
      for (uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) {
          prime = false;
          break;
        }
      if (!prime) continue;
      uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (uint64_t m = start; m <= hi; m += 2 * p)
        composite[(m - lo) / 2] = true;
    }
    for (uint64_t c = lo; c <= hi; c += 2)
      if (!composite[(c - lo) / 2]) g_primes.push_back(c);
  }
}

std::mutex g_dyadic_mutex;
std::vector<Rat> g_dyadics;                 // enumeration values, 0-based
std::map<Rat, std::size_t> g_dyadic_index;  // value -> 1-based index
// Anti-diagonal cursor: s = k + j, walked with k ascending.
long g_dyadic_s = 0;
long g_dyadic_k = 0;

void grow_dyadics_locked(std::size_t count) {
  while (g_dyadics.size() < count) {
    if (g_dyadic_s == 0 || g_dyadic_k > g_dyadic_s - 1) {
      ++g_dyadic_s;
      g_dyadic_k = 0;
    }
    long k = g_dyadic_k;
    long j = g_dyadic_s - k;
    ++g_dyadic_k;
    // 1 + j/2^k is in lowest terms iff k = 0 or j is odd; the lowest-terms
    // pair is the first occurrence of its value in this sweep.
    if (k > 0 && j % 2 == 0) continue;
    Rat value = Rat(1) + Rat(Int(j), Int(1) << k);
    g_dyadics.push_back(value);
    g_dyadic_index.emplace(value, g_dyadics.size());
  }
}

}  // namespace

uint64_t nth_prime(std::size_t n) {
  if (n == 0) throw std::invalid_argument("nth_prime: 1-based index");
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  grow_primes_locked(n);
  return g_primes[n - 1];
}

uint64_t nth_odd_prime(std::size_t n) { return nth_prime(n + 1); }

uint64_t nth_prime_gt3(std::size_t n) { return nth_prime(n + 2); }

std::size_t odd_prime_index(uint64_t p) {
  if (p < 3 || !is_prime(Int(p))) return 0;
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  auto it = g_prime_index.find(p);
  if (it != g_prime_index.end()) return it->second;
  std::size_t count = g_primes.size();
  while (g_primes.back() < p) {
    count *= 2;
    grow_primes_locked(count);
  }
  auto pos = std::lower_bound(g_primes.begin(), g_primes.end(), p);
  if (pos == g_primes.end() || *pos != p) return 0;
  // 0-based offset into g_primes equals the 1-based odd-prime index,
  // because g_primes[0] is 2.
  std::size_t idx = static_cast<std::size_t>(pos - g_primes.begin());
  g_prime_index.emplace(p, idx);
  return idx;
}

Int nth_odd_gt1(std::size_t n) {
  if (n == 0) throw std::invalid_argument("nth_odd_gt1: 1-based index");
  return Int(2 * n + 1);
}

Int ell2(const Int& x) {
  if (x < 2) throw std::invalid_argument("ell2: requires x >= 2");
  Int power = 1;
  while (power * 2 < x) power *= 2;
  return power;
}

Rat enumerate_dyadics_gt1(std::size_t n) {
  if (n == 0) throw std::invalid_argument("enumerate_dyadics_gt1: 1-based");
  std::lock_guard<std::mutex> lock(g_dyadic_mutex);
  grow_dyadics_locked(n);
  return g_dyadics[n - 1];
}

std::size_t dyadic_gt1_index(const Rat& r) {
  if (!(r > Rat(1))) {
    throw std::invalid_argument("dyadic_gt1_index: value must exceed 1");
  }
  Int den = r.den();
  while (den % 2 == 0) den /= 2;
  if (den != 1) {
    throw std::invalid_argument("dyadic_gt1_index: value is not dyadic");
  }
  std::lock_guard<std::mutex> lock(g_dyadic_mutex);
  // r = 1 + j/2^k sits on anti-diagonal s = k + j, so it appears within
  // the first (s+1)^2 enumeration steps; grow until found.
  while (true) {
    auto it = g_dyadic_index.find(r);
    if (it != g_dyadic_index.end()) return it->second;
    grow_dyadics_locked(g_dyadics.size() * 2 + 16);
  }
}

uint64_t partition_primes(int l, std::size_t n) {
  if (l < 1 || n < 1) {
    throw std::invalid_argument("partition_primes: l >= 1 and n >= 1");
  }
  if (l > 40) throw std::invalid_argument("partition_primes: pool too deep");
  std::size_t i = (std::size_t{1} << (l - 1)) * (2 * n - 1);
  return nth_odd_prime(i);
}

bool in_partition_pool(int l, uint64_t p) {
  std::size_t i = odd_prime_index(p);
  if (i == 0) return false;
  // i = 2^(l-1) * odd  <=>  v_2(i) == l - 1.
  int v = 0;
  while (i % 2 == 0) {
    i /= 2;
    ++v;
  }
  return v == l - 1;
}

}  // namespace puiseux
