// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#ifndef PUISEUX_FAMILIES_HPP
#define PUISEUX_FAMILIES_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "puiseux/fg.hpp"
#include "puiseux/membership.hpp"
#include "puiseux/numbers.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

enum class FamilyTag {
  PowDenom,  // <1/2, 1/p^n>: quasi-Furstenberg, not almost/nearly Furstenberg
  AfNotF,    // dyadic cone + r_n/p_n: almost+nearly Furstenberg, not Furstenberg
  NfNotAf,   // {1/p} + dyadics + shifted coset: nearly but not almost Furstenberg
  AfNotNf,   // dyadic cone + (1 - 1/2^n)/p_n: almost but not nearly Furstenberg
  FNotAa,    // <1/p : p odd> u Q>=1: Furstenberg, not almost atomic
  NaNotF,    // 1/3, dyadics, o_n/(l2(o_n) p_n): nearly atomic, not Furstenberg
  Grams,     // <1/(2^n p_n)>: atomic positive control
  LexCone,   // nonnegative lex cone of Z^2 (not a Puiseux monoid)
};

const char* family_tag_name(FamilyTag tag);

/// Base monoid with closed-form membership, underlying the structured
/// presentations.
struct BaseMonoid {
  enum class Kind {
    PrimePowerCone,       // N0[1/p], canonical stream 1, 1/p, 1/p^2, ...
    RationalRayWithZero,  // {0} u Q>=1, truncation stream 1, 3/2, 2, 5/2, ...
    Trivial,
  };
  Kind kind = Kind::Trivial;
  Int p = 2;  // PrimePowerCone only

  bool contains(const Rat& q) const;
  Rat stream(std::size_t n) const;  // 1-based canonical generator stream
  std::set<Int> finite_support() const;  // PrimePowerCone only
};

/// Generator carrying a denominator prime unique to it within its family;
/// the engine behind the valuation-based membership oracles.
struct TaggedAtom {
  std::size_t index = 0;
  Rat value;
  Int private_prime;
};

struct InfValuation {
  bool minus_infinity = false;
  long value = 0;
  static InfValuation neg_inf() { return {true, 0}; }
  static InfValuation finite(long v) { return {false, v}; }
  friend bool operator==(const InfValuation&, const InfValuation&) = default;
  std::string str() const {
    return minus_infinity ? "-inf" : std::to_string(value);
  }
};

/// Test-only fault injection for the family oracles, used by the mutation
/// sensitivity checks. Production code never sets these.
enum class OracleMutation {
  None,
  NfNotAfDropPositivity,       // accept a zero dyadic tail on coset terms
  AllowNegativeRemainder,      // generic oracle ignores the remainder sign
  FNotAaDropRay,               // f-not-aa oracle loses the q >= 1 ray
};
namespace testing {
void set_oracle_mutation(OracleMutation m);
OracleMutation oracle_mutation();
}  // namespace testing

/// One of the named Puiseux monoid families (or the lex cone), with its
/// generator streams, claimed atoms, exact membership oracle, and
/// isomorphism-invariant metadata. Immutable after construction; all
/// queries are safe to run concurrently.
class Family {
 public:
  /// Builds a family; param is p for pow-denom (odd prime) and nf-not-af
  /// (prime >= 7), and l >= 1 for af-not-f / af-not-nf; other tags take
  /// no parameter. Throws std::invalid_argument on bad parameters.
  static Family build(FamilyTag tag, long param = 0);

  /// Parses "family:<tag>{key=value}", e.g. "family:nf-not-af{p=7}".
  static Family parse(std::string_view spec);
  std::string str() const;

  FamilyTag tag() const { return tag_; }
  long param() const { return param_; }
  bool is_lexcone() const { return tag_ == FamilyTag::LexCone; }
  const BaseMonoid& base() const { return base_; }

  /// Exact membership; total (Member or NonMember) for every family.
  MembershipResult member(const Rat& q) const;

  /// Divisibility a | b in the family: member(b - a). Throws when a or b
  /// is not a member.
  MembershipResult divides(const Rat& a, const Rat& b) const;

  /// First n elements of the claimed atom set in stream order; may
  /// return fewer when the atom set is finite.
  std::vector<Rat> claimed_atoms(std::size_t n) const;

  /// n-th tagged atom of the structured families; throws for families
  /// without a tagged stream (nf-not-af, f-not-aa, lexcone).
  TaggedAtom tagged_atom(std::size_t n) const;

  /// Atom index owning private prime f, if any.
  std::optional<std::size_t> private_prime_index(const Int& f) const;

  /// Finitely generated truncation: first `depth` base-stream generators
  /// plus the first `depth` family generators; monotone in depth.
  FgPresentation truncate(std::size_t depth) const;

  SupportSet support_descriptor() const;
  InfValuation inf_vp(const Int& p) const;

  /// f-not-aa only: membership in the atomic part <1/p : p odd prime>.
  bool atomic_part_member(const Rat& q) const;

  // Lex cone (element type Z^2); static because the monoid is fixed.
  static bool lexcone_member(const Int& x, const Int& y);
  static bool lexcone_divides(const std::pair<Int, Int>& a,
                              const std::pair<Int, Int>& b);

 private:
  Family() = default;
  struct AtomCache;
  MembershipResult structured_member(const Rat& q) const;
  MembershipResult nf_not_af_member(const Rat& q) const;
  MembershipResult f_not_aa_member(const Rat& q) const;
  TaggedAtom make_atom_locked(std::size_t n) const;

  FamilyTag tag_ = FamilyTag::PowDenom;
  long param_ = 0;
  BaseMonoid base_;
  std::shared_ptr<AtomCache> atoms_;
};

/// Result of the decomposition search for `candidate` within
/// truncate(family, depth).
struct AtomCheck {
  bool is_atom = false;
  std::size_t depth = 0;
  Rat x, y;  // decomposition witness when !is_atom
};

/// Searches truncate(family, depth) for candidate = x + y with x, y
/// nonzero members. A witness refutes atomicity in the full family
/// (truncations embed); absence only certifies atomicity up to depth.
AtomCheck is_atom_truncated(const Family& family, const Rat& candidate,
                            std::size_t depth,
                            const FgSearchOptions& opts = {});

/// Explicit decomposition g = x + y with nonzero family members x, y,
/// refuting atomhood of a non-claimed defining generator in the full
/// family. Throws if no decomposition is found (claimed atoms).
std::pair<Rat, Rat> refute_atom(const Family& family, const Rat& g);

}  // namespace puiseux

#endif  // PUISEUX_FAMILIES_HPP
