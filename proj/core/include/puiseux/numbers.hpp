// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#ifndef PUISEUX_NUMBERS_HPP
#define PUISEUX_NUMBERS_HPP

#include <cstdint>
#include <set>
#include <string>

#include "puiseux/rat.hpp"

namespace puiseux {

/// p-adic valuation value; infinite only for input 0.
struct Valuation {
  bool infinite = false;
  long value = 0;

  static Valuation inf() { return {true, 0}; }
  static Valuation finite(long v) { return {false, v}; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Deterministic primality decision (trial division below 1e6,
/// Miller-Rabin with the 64-bit-exact base set above). Throws for inputs
/// beyond 64 bits; the family constructions never get near that.
bool is_prime(const Int& n);

/// v_p(q); requires p prime. v_p(0) = infinity.
Valuation padic_valuation(const Rat& q, const Int& p);

/// v_p of a nonzero integer.
long padic_valuation_int(Int n, const Int& p);

/// Primes dividing d(q), for q > 0. Throws for q <= 0 or when the
/// denominator cannot be factored at desk scale.
std::set<Int> prime_support(const Rat& q);

/// Full factorization of n >= 1 into primes (desk scale; throws when a
/// cofactor above the trial-division bound is composite).
std::set<Int> prime_factors(const Int& n);

/// q mod p for a rational with v_p(q) >= 0, as a value in [0, p).
Int residue_mod_p(const Rat& q, const Int& p);

/// Modular inverse of a mod p (p prime, a != 0 mod p).
Int mod_inverse(const Int& a, const Int& p);

/// Symbolic prime-support descriptor. Finite descriptors enumerate
/// exactly; the other kinds describe the infinite supports of the
/// structured families (an infinite subset of a partition pool P_l,
/// all odd primes, or all primes), each together with a finite extra set.
struct SupportSet {
  enum class Kind { Finite, CofinalInPool, AllOddPrimes, AllPrimes };
  Kind kind = Kind::Finite;
  std::set<Int> primes;  // the finite set, or the finite extras
  int pool = 0;          // P_l index when kind == CofinalInPool

  static SupportSet finite(std::set<Int> s) {
    return {Kind::Finite, std::move(s), 0};
  }
  static SupportSet cofinal_in_pool(int pool_index, std::set<Int> extras) {
    return {Kind::CofinalInPool, std::move(extras), pool_index};
  }
  static SupportSet all_odd_primes() { return {Kind::AllOddPrimes, {}, 0}; }
  static SupportSet all_primes() { return {Kind::AllPrimes, {}, 0}; }

  /// Symmetric difference, defined for two Finite descriptors.
  std::set<Int> symmetric_difference(const SupportSet& other) const;

  std::string str() const;
};

}  // namespace puiseux

#endif  // PUISEUX_NUMBERS_HPP
