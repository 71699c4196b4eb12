// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#ifndef PUISEUX_PROPS_HPP
#define PUISEUX_PROPS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/families.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

enum class Property {
  Antimatter,
  Atomic,
  Furstenberg,
  QuasiFurstenberg,
  AlmostFurstenberg,
  NearlyFurstenberg,
  QuasiAtomic,
  AlmostAtomic,
  NearlyAtomic,
};
const char* property_name(Property p);
std::vector<Property> all_properties();

enum class VerdictKind {
  Proven,           // closed-form argument covering every element
  ProvenOnSample,   // sample-limited positive evidence, flagged as such
  Refuted,          // explicit counterexample or obstruction
  UnknownAtDepth,   // neither direction decided within the search depth
};
const char* verdict_kind_name(VerdictKind k);
bool verdict_positive(VerdictKind k);  // Proven or ProvenOnSample

/// Verdict for one property of one monoid, carrying machine-checkable
/// evidence. Every Proven/Refuted status re-verifies through the family
/// oracles alone (see the verify_* functions, which are independent code
/// from the provers).
struct PropertyStatus {
  Property property = Property::Furstenberg;
  VerdictKind kind = VerdictKind::UnknownAtDepth;
  std::size_t depth = 0;
  std::map<std::string, std::string> witness;  // payload name -> exact text
  std::vector<Rat> sample;                     // when sample-limited
  std::string detail;
};

// --- Witness constructors -------------------------------------------------

/// c := (n(a)d(b) - 1) b, so that b + c = n(b)d(a) a: every nonzero
/// member is quasi-atomic as soon as one atom exists.
struct QuasiAtomicWitness {
  Rat b, a, c;
  Int k;  // b + c = k a
};
QuasiAtomicWitness quasi_atomic_witness(const Family& f, const Rat& b,
                                        const Rat& a);

/// Reduces the quasi-atomic c by copies of a until a no longer divides
/// it; the result satisfies a | b + c and a does not divide c.
struct QuasiFurstenbergWitness {
  Rat b, a, c;
};
QuasiFurstenbergWitness quasi_furstenberg_witness(const Family& f,
                                                  const Rat& b);

/// Exact atom-divisor decision. Every family here has a closed-form
/// characterization of its Furstenberg elements, so the verdict is
/// always Proven (with the dividing atom) or Refuted (with the
/// obstruction); the depth parameter only bounds certificate searches.
struct FurstenbergStatus {
  VerdictKind kind = VerdictKind::UnknownAtDepth;
  std::optional<Rat> atom;  // set when Proven
  std::string detail;
};
FurstenbergStatus furstenberg_witness(const Family& f, const Rat& b,
                                      std::size_t depth = 50);

/// Almost-Furstenberg witness for one element: an atomic c (given as
/// explicit atom multiples) and an atom a with a | b + c, a not | c.
/// Families whose atom set is a single non-generating atom are Refuted.
struct AlmostFurstenbergWitness {
  VerdictKind kind = VerdictKind::UnknownAtDepth;
  Rat b, c;
  std::vector<Certificate::Term> c_atomic;  // c as atom multiples
  std::optional<Rat> a;
  std::string detail;
};
AlmostFurstenbergWitness almost_furstenberg_witness(const Family& f,
                                                    const Rat& b);

/// Checks one shared c against a sample: every sampled b must admit an
/// atom a with a | b + c and a not | c.
PropertyStatus nearly_furstenberg_verify(const Family& f, const Rat& c,
                                         const std::vector<Rat>& sample,
                                         std::size_t atom_search = 64);

/// For the almost-but-not-nearly-Furstenberg family: given any candidate
/// c, produces b = 1/2^i such that every atom dividing b + c already
/// divides c. The choice of i is the threshold-gap argument on the
/// sequence 1 - 1/2^n against the dyadic part of c.
struct NearlyFurstenbergRefutation {
  Rat c, b, d_c;  // d_c = dyadic part of the normal form of c
  long i = 0;
  std::size_t atoms_checked = 0;
  bool verified = false;
};
NearlyFurstenbergRefutation nearly_furstenberg_refute(const Family& f,
                                                      const Rat& c,
                                                      std::size_t depth = 30);

/// Total decision for the Furstenberg-not-almost-atomic family: Proven
/// iff v_2(b) >= 0 (with explicit atomic c such that b + c is a positive
/// integer), Refuted otherwise by the 2-adic difference obstruction.
PropertyStatus almost_atomic_decide(const Family& f, const Rat& b);

/// Atom factorization of 1 + b for a dyadic member b of the nearly-
/// atomic-not-Furstenberg family: 1 + b = multiplier * atom exactly.
struct AtomicFactorization {
  Rat b, total, atom;
  Int multiplier;
};
AtomicFactorization nearly_atomic_factor(const Family& f, const Rat& b);
PropertyStatus nearly_atomic_verify(const Family& f,
                                    const std::vector<Rat>& dyadic_sample);

/// Isomorphism-invariant separation per the support / inf-valuation
/// invariants: Proven only on a provably infinite invariant mismatch.
struct NonIsomorphismWitness {
  bool proven = false;
  std::string reason;
};
NonIsomorphismWitness nonisomorphism_witness(const Family& f1,
                                             const Family& f2);

// --- Independent verifiers (re-check evidence through oracles only) -------

bool verify_quasi_atomic(const Family& f, const QuasiAtomicWitness& w);
bool verify_quasi_furstenberg(const Family& f,
                              const QuasiFurstenbergWitness& w);
bool verify_almost_furstenberg(const Family& f,
                               const AlmostFurstenbergWitness& w);
bool verify_nearly_furstenberg_refutation(
    const Family& f, const NearlyFurstenbergRefutation& r,
    std::size_t depth = 30);
bool verify_atomic_factorization(const Family& f,
                                 const AtomicFactorization& w);

// --- Reports ---------------------------------------------------------------

/// All nine property statuses of a family, witnesses verified.
std::vector<PropertyStatus> property_report(const Family& f,
                                            std::size_t depth = 50);

/// Consistency audit: computes the property vector, asserts that no
/// implication of the hierarchy (atomic => Furstenberg => nearly/almost
/// => quasi; nearly-atomic => almost-atomic => quasi-atomic) is violated
/// at the verdict level, and compares against the expected
/// classification of each family.
struct DiagramAudit {
  std::vector<PropertyStatus> statuses;
  std::vector<std::string> violations;  // empty iff consistent
  bool consistent = false;
};
DiagramAudit diagram_audit(const Family& f, std::size_t depth = 50);

/// Deterministic member sample for property evaluation: sums of pairs of
/// truncation generators plus the generators themselves.
std::vector<Rat> member_sample(const Family& f, std::size_t depth,
                               std::size_t limit);

}  // namespace puiseux

#endif  // PUISEUX_PROPS_HPP
