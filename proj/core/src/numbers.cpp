// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#include "puiseux/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace puiseux {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool miller_rabin_u64(uint64_t n) {
  // Exact for all 64-bit inputs with this base set.
  static constexpr uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                        31, 37};
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kBases) {
    if (a % n == 0) continue;
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

constexpr uint64_t kTrialBound = 1000000;

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n > Int(UINT64_MAX)) {
    throw std::invalid_argument("is_prime: input beyond 64 bits");
  }
  uint64_t v = n.convert_to<uint64_t>();
  if (v < kTrialBound) {
    if (v % 2 == 0) return v == 2;
    for (uint64_t d = 3; d * d <= v; d += 2) {
      if (v % d == 0) return false;
    }
    return true;
  }
  if (v % 2 == 0) return false;
  return miller_rabin_u64(v);
}

long padic_valuation_int(Int n, const Int& p) {
  if (n == 0) throw std::invalid_argument("padic_valuation_int: zero");
  if (n < 0) n = -n;
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Valuation padic_valuation(const Rat& q, const Int& p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("padic_valuation: p = " + p.str() +
                                " is not prime");
  }
  if (q.is_zero()) return Valuation::inf();
  return Valuation::finite(padic_valuation_int(q.num(), p) -
                           padic_valuation_int(q.den(), p));
}

std::set<Int> prime_factors(const Int& n) {
  if (n < 1) throw std::invalid_argument("prime_factors: input below 1");
  std::set<Int> out;
  Int rem = n;
  for (Int d = 2; d <= 3; ++d) {
    if (rem % d == 0) {
      out.insert(d);
      while (rem % d == 0) rem /= d;
    }
  }
  for (Int d = 5; d * d <= rem && d < Int(kTrialBound); d += 2) {
    if (rem % d == 0) {
      out.insert(d);
      while (rem % d == 0) rem /= d;
    }
  }
  if (rem > 1) {
    if (!is_prime(rem)) {
      throw std::invalid_argument("prime_factors: cofactor " + rem.str() +
                                  " is composite beyond desk scale");
    }
    out.insert(rem);
  }
  return out;
}

std::set<Int> prime_support(const Rat& q) {
  if (!q.is_positive()) {
    throw std::invalid_argument("prime_support: q must be positive");
  }
  return prime_factors(q.den());
}

Int mod_inverse(const Int& a, const Int& p) {
  // Extended Euclid; p prime and a nonzero mod p.
  Int r0 = p, r1 = a % p, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += p;
  if (r1 == 0) throw std::invalid_argument("mod_inverse: zero residue");
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p;
  return t0;
}

Int residue_mod_p(const Rat& q, const Int& p) {
  Int n = q.num() % p;
  if (n < 0) n += p;
  Int d = q.den() % p;
  if (d == 0) {
    throw std::invalid_argument("residue_mod_p: negative p-adic valuation");
  }
  return (n * mod_inverse(d, p)) % p;
}

std::set<Int> SupportSet::symmetric_difference(const SupportSet& other) const {
  if (kind != Kind::Finite || other.kind != Kind::Finite) {
    throw std::invalid_argument(
        "SupportSet::symmetric_difference: both sides must be finite");
  }
  std::set<Int> out;
  std::set_symmetric_difference(primes.begin(), primes.end(),
                                other.primes.begin(), other.primes.end(),
                                std::inserter(out, out.begin()));
  return out;
}

std::string SupportSet::str() const {
  auto list = [this]() {
    std::string s = "{";
    bool first = true;
    for (const Int& p : primes) {
      if (!first) s += ",";
      s += p.str();
      first = false;
    }
    return s + "}";
  };
  switch (kind) {
    case Kind::Finite:
      return list();
    case Kind::CofinalInPool:
      return list() + " u infinite-subset(P_" + std::to_string(pool) + ")";
    case Kind::AllOddPrimes:
      return "all-odd-primes";
    case Kind::AllPrimes:
      return "all-primes";
  }
  return "";
}

}  // namespace puiseux
