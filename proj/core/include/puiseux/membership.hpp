// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#ifndef PUISEUX_MEMBERSHIP_HPP
#define PUISEUX_MEMBERSHIP_HPP

#include <optional>
#include <string>
#include <vector>

#include "puiseux/rat.hpp"

namespace puiseux {

/// Explicit witness for a positive membership answer: a finite
/// nonnegative-integer combination of generators that sums to the query.
struct Certificate {
  struct Term {
    Rat generator;
    Int coefficient;  // > 0
  };
  std::vector<Term> terms;

  Rat sum() const {
    Rat s;
    for (const Term& t : terms) s += Rat(t.coefficient) * t.generator;
    return s;
  }
  std::string str() const;
};

enum class Verdict { Member, NonMember, Unknown };

struct MembershipResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Certificate> certificate;  // set iff Member
  std::string obstruction;                 // set iff NonMember
  std::optional<Int> search_bound;         // set iff Unknown

  bool is_member() const { return verdict == Verdict::Member; }
  bool is_nonmember() const { return verdict == Verdict::NonMember; }
  bool is_unknown() const { return verdict == Verdict::Unknown; }

  static MembershipResult member(Certificate cert) {
    MembershipResult r;
    r.verdict = Verdict::Member;
    r.certificate = std::move(cert);
    return r;
  }
  static MembershipResult nonmember(std::string why) {
    MembershipResult r;
    r.verdict = Verdict::NonMember;
    r.obstruction = std::move(why);
    return r;
  }
  static MembershipResult unknown(Int bound) {
    MembershipResult r;
    r.verdict = Verdict::Unknown;
    r.search_bound = std::move(bound);
    return r;
  }
};

}  // namespace puiseux

#endif  // PUISEUX_MEMBERSHIP_HPP
