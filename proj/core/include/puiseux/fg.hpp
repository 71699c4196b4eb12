// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#ifndef PUISEUX_FG_HPP
#define PUISEUX_FG_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/membership.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

/// Search budget for the finitely generated oracle. Queries whose scaled
/// integer target exceeds dp_target_limit fall back to a coefficient-
/// bounded depth-first search capped at dfs_node_budget nodes; an
/// exhausted budget yields Unknown, never a wrong answer.
struct FgSearchOptions {
  Int dp_target_limit = 1000000;
  long dfs_node_budget = 200000;
};

/// Finite list of positive rationals, sorted ascending with duplicates
/// removed; presents the Puiseux monoid of all nonnegative-integer
/// combinations. This is the brute-force oracle of record that the
/// structured family oracles are differentially tested against.
class FgPresentation {
 public:
  explicit FgPresentation(std::vector<Rat> generators);

  /// Parses "fg:1/2,1/3,5/6".
  static FgPresentation parse(std::string_view spec);
  std::string str() const;

  const std::vector<Rat>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  /// Membership of q, with a certificate on success. The certificate is
  /// the lexicographically smallest coefficient vector with respect to
  /// the sorted generator order whenever the scaled-target DP route is
  /// taken; the DFS fallback returns the first combination found by its
  /// deterministic descent.
  MembershipResult member(const Rat& q,
                          const FgSearchOptions& opts = {}) const;

  /// Generators g with g not in <generators \ {g}>; equals the atom set.
  std::vector<Rat> atoms(const FgSearchOptions& opts = {}) const;

  /// Divisibility of a into b relative to this monoid: b - a in <P>.
  /// Throws std::invalid_argument when a or b is not a member.
  MembershipResult divides(const Rat& a, const Rat& b,
                           const FgSearchOptions& opts = {}) const;

  /// True iff every generator is an integer multiple of the minimum
  /// generator a, i.e. the monoid is N0*a; fills *witness with a.
  bool is_cyclic(Rat* witness = nullptr) const;

 private:
  struct DpCache;
  std::vector<Rat> generators_;
  Int denominator_lcm_ = 1;
  mutable std::shared_ptr<DpCache> cache_;  // lazily built, mutex-guarded
};

}  // namespace puiseux

#endif  // PUISEUX_FG_HPP
