// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#include "puiseux/fg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "puiseux/numbers.hpp"

namespace puiseux {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

std::string join_rats(const std::vector<Rat>& rats) {
  std::string s;
  for (std::size_t i = 0; i < rats.size(); ++i) {
    if (i) s += ',';
    s += rats[i].str();
  }
  return s;
}

}  // namespace

std::string Certificate::str() const {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    s += terms[i].coefficient.str() + "*(" + terms[i].generator.str() + ")";
  }
  return s.empty() ? "0" : s;
}

// Suffix reachability tables for the scaled integer knapsack: row i says
// which targets are sums of generators i..m-1. Built lazily, grown on
// demand, shared across queries on one presentation.
struct FgPresentation::DpCache {
  std::mutex mutex;
  long cap = -1;                             // largest target covered
  std::vector<std::vector<bool>> reach;      // m+1 rows, cap+1 columns
};

FgPresentation::FgPresentation(std::vector<Rat> generators)
    : generators_(std::move(generators)), cache_(std::make_shared<DpCache>()) {
  for (const Rat& g : generators_) {
    if (!g.is_positive()) {
      throw std::invalid_argument(
          "FgPresentation: generators must be positive, got " + g.str());
    }
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
  for (const Rat& g : generators_) {
    denominator_lcm_ = lcm(denominator_lcm_, g.den());
  }
}

FgPresentation FgPresentation::parse(std::string_view spec) {
  constexpr std::string_view kTag = "fg:";
  if (spec.substr(0, kTag.size()) != kTag) {
    throw std::invalid_argument("FgPresentation: spec must start with 'fg:'");
  }
  std::string_view body = spec.substr(kTag.size());
  std::vector<Rat> gens;
  while (!body.empty()) {
    auto comma = body.find(',');
    gens.push_back(Rat::parse(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (gens.empty()) {
    throw std::invalid_argument("FgPresentation: empty generator list");
  }
  return FgPresentation(std::move(gens));
}

std::string FgPresentation::str() const { return "fg:" + join_rats(generators_); }

namespace {

// Depth-first search over coefficient vectors, largest generator first,
// coefficients descending. Prunes on denominator support: a remainder
// whose denominator carries a prime absent from every remaining
// generator can never be cleared.
struct DfsState {
  const std::vector<Rat>* gens_desc;                // largest first
  const std::vector<std::vector<Int>>* suffix_primes;  // per position
  std::vector<Int> coeffs;
  long nodes_left = 0;
  bool budget_hit = false;

  bool run(std::size_t i, const Rat& rem) {
    if (rem.is_zero()) return true;
    if (--nodes_left < 0) {
      budget_hit = true;
      return false;
    }
    if (i == gens_desc->size()) return false;
    for (const Int& p : (*suffix_primes)[i]) {
      // suffix_primes[i] lists candidate primes NOT covered past i.
      if (rem.den() % p == 0) return false;
    }
    const Rat& g = (*gens_desc)[i];
    for (Int c = floor_int(rem / g); c >= 0; --c) {
      coeffs[i] = c;
      if (run(i + 1, rem - Rat(c) * g)) return true;
      if (budget_hit) return false;
    }
    coeffs[i] = 0;
    return false;
  }
};

}  // namespace

MembershipResult FgPresentation::member(const Rat& q,
                                        const FgSearchOptions& opts) const {
  if (q.is_zero()) return MembershipResult::member(Certificate{});
  if (q.is_negative()) {
    return MembershipResult::nonmember("negativity: " + q.str() + " < 0");
  }
  if (generators_.empty()) {
    return MembershipResult::nonmember("empty presentation");
  }
  // Denominator support check: q*L must be an integer.
  Rat scaled = q * Rat(denominator_lcm_);
  if (!scaled.is_integer()) {
    return MembershipResult::nonmember(
        "support obstruction: d(q) has a prime factor outside the "
        "generator denominators");
  }
  const Int target = scaled.num();
  const std::size_t m = generators_.size();

  if (target <= opts.dp_target_limit) {
    long t = target.convert_to<long>();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->cap < t) {
      long cap = 1;
      while (cap < t) cap *= 2;
      cache_->reach.assign(m + 1, std::vector<bool>(cap + 1, false));
      cache_->reach[m][0] = true;
      for (std::size_t i = m; i-- > 0;) {
        auto& row = cache_->reach[i];
        row = cache_->reach[i + 1];
        Int wi = generators_[i].num() * (denominator_lcm_ / generators_[i].den());
        if (wi <= cap) {
          long w = wi.convert_to<long>();
          for (long s = w; s <= cap; ++s) {
            if (row[s - w]) row[s] = true;
          }
        }
      }
      cache_->cap = cap;
    }
    if (!cache_->reach[0][t]) {
      return MembershipResult::nonmember("exhaustive scaled-target search");
    }
    // Extract the lexicographically smallest coefficient vector in the
    // ascending generator order.
    Certificate cert;
    long rem = t;
    for (std::size_t i = 0; i < m; ++i) {
      Int wi = generators_[i].num() * (denominator_lcm_ / generators_[i].den());
      if (wi > rem) continue;
      long w = wi.convert_to<long>();
      long c = 0;
      while (!cache_->reach[i + 1][rem - c * w]) {
        ++c;
        if (c * w > rem) {
          throw std::logic_error("FgPresentation: DP extraction failed");
        }
      }
      if (c > 0) {
        cert.terms.push_back({generators_[i], Int(c)});
        rem -= c * w;
      }
    }
    if (rem != 0) throw std::logic_error("FgPresentation: DP residue nonzero");
    return MembershipResult::member(std::move(cert));
  }

  // DFS fallback for targets beyond the DP budget.
  std::vector<Rat> desc(generators_.rbegin(), generators_.rend());
  // suffix_primes[i]: primes that may appear in a remainder denominator
  // but divide no generator denominator from position i on.
  std::vector<std::vector<Int>> suffix_primes(m);
  {
    std::set<Int> candidates = prime_factors(denominator_lcm_ * q.den());
    std::set<Int> covered;
    for (std::size_t i = m; i-- > 0;) {
      for (const Int& p : prime_factors(desc[i].den())) covered.insert(p);
      for (const Int& p : candidates) {
        if (covered.find(p) == covered.end()) suffix_primes[i].push_back(p);
      }
    }
  }
  DfsState dfs{&desc, &suffix_primes, std::vector<Int>(m), opts.dfs_node_budget,
               false};
  if (dfs.run(0, q)) {
    Certificate cert;
    for (std::size_t i = m; i-- > 0;) {
      if (dfs.coeffs[i] > 0) cert.terms.push_back({desc[i], dfs.coeffs[i]});
    }
    return MembershipResult::member(std::move(cert));
  }
  if (dfs.budget_hit) {
    return MembershipResult::unknown(Int(opts.dfs_node_budget));
  }
  return MembershipResult::nonmember("exhaustive coefficient-bounded search");
}

std::vector<Rat> FgPresentation::atoms(const FgSearchOptions& opts) const {
  std::vector<Rat> result;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    std::vector<Rat> others;
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (j != i) others.push_back(generators_[j]);
    }
    if (others.empty()) {
      result.push_back(generators_[i]);
      continue;
    }
    MembershipResult r = FgPresentation(others).member(generators_[i], opts);
    if (r.is_unknown()) {
      throw std::runtime_error("atoms: membership search exceeded budget for " +
                               generators_[i].str());
    }
    if (r.is_nonmember()) result.push_back(generators_[i]);
  }
  return result;
}

MembershipResult FgPresentation::divides(const Rat& a, const Rat& b,
                                         const FgSearchOptions& opts) const {
  for (const Rat* x : {&a, &b}) {
    MembershipResult r = member(*x, opts);
    if (!r.is_member()) {
      throw std::invalid_argument("divides: " + x->str() +
                                  " is not a member of " + str());
    }
  }
  return member(b - a, opts);
}

bool FgPresentation::is_cyclic(Rat* witness) const {
  if (generators_.empty()) {
    throw std::invalid_argument("is_cyclic: empty presentation");
  }
  const Rat& a = generators_.front();
  for (const Rat& g : generators_) {
    if (!(g / a).is_integer()) return false;
  }
  if (witness != nullptr) *witness = a;
  return true;
}

}  // namespace puiseux
