// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.
//
// Integration gate: one pass/fail line per acceptance criterion.
//   1. differential soundness of the family oracles vs truncations
//   2. atom-set claims (truncated atom checks + explicit refutations)
//   3. the full claim suite
//   4. diagram audit of the property hierarchy for every family
//   5. mutation sensitivity of the harness

#include <chrono>
#include <exception>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "puiseux/families.hpp"
#include "puiseux/props.hpp"
#include "puiseux/report.hpp"

using namespace puiseux;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& evidence) {
  std::cout << "criterion " << criterion << " (" << name << "): "
            << (pass ? "PASS" : "FAIL") << " — " << evidence << "\n";
  if (!pass) ++g_failures;
}

long elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

const std::vector<std::string> kPuiseuxFamilies = {
    "family:af-not-f{l=1}", "family:af-not-nf{l=1}", "family:nf-not-af{p=7}",
    "family:pow-denom{p=3}", "family:f-not-aa", "family:na-not-f",
    "family:grams"};

void criterion_differential() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t queries = 0, disagreements = 0;
  std::string first;
  try {
    for (const std::string& spec : kPuiseuxFamilies) {
      CrosscheckResult r = crosscheck_family(Family::parse(spec), {});
      queries += r.queries;
      disagreements += r.disagreements;
      if (r.first_counterexample && first.empty())
        first = spec + " at " + r.first_counterexample->str() + ": " +
                r.detail;
    }
  } catch (const std::exception& e) {
    report(1, "differential soundness", false, e.what());
    return;
  }
  long ms = elapsed_ms(t0);
  report(1, "differential soundness",
         disagreements == 0 && ms <= 120000,
         std::to_string(queries) + " grid queries across " +
             std::to_string(kPuiseuxFamilies.size()) + " families, " +
             std::to_string(disagreements) + " disagreements" +
             (first.empty() ? "" : " (first: " + first + ")") + ", " +
             std::to_string(ms) + " ms");
}

void criterion_atom_sets() {
  std::size_t atom_checks = 0, refutations = 0, failures = 0;
  std::string detail;
  try {
    for (const std::string& spec : kPuiseuxFamilies) {
      Family f = Family::parse(spec);
      std::set<Rat> claimed;
      for (const Rat& a : f.claimed_atoms(20)) claimed.insert(a);
      for (const Rat& a : claimed) {
        ++atom_checks;
        if (!is_atom_truncated(f, a, 10).is_atom) {
          ++failures;
          if (detail.empty())
            detail = spec + ": claimed atom " + a.str() + " decomposed";
        }
      }
      // Every non-claimed defining generator splits explicitly.
      std::vector<Rat> gens = f.truncate(6).generators();
      for (const Rat& g : gens) {
        if (claimed.count(g)) continue;
        ++refutations;
        auto [x, y] = refute_atom(f, g);
        if (x + y != g || !f.member(x).is_member() ||
            !f.member(y).is_member()) {
          ++failures;
          if (detail.empty())
            detail = spec + ": bad decomposition for generator " + g.str();
        }
      }
    }
  } catch (const std::exception& e) {
    report(2, "atom-set claims", false, e.what());
    return;
  }
  report(2, "atom-set claims", failures == 0,
         std::to_string(atom_checks) + " truncated atom checks and " +
             std::to_string(refutations) +
             " generator refutations, " + std::to_string(failures) +
             " failures" + (detail.empty() ? "" : " (" + detail + ")"));
}

void criterion_claim_suite() {
  try {
    ReportDocument doc = run_claim_suite({});
    std::string bad;
    for (const ClaimRecord& c : doc.claims)
      if (!c.passed) bad += (bad.empty() ? "" : ", ") + c.id;
    report(3, "claim suite", doc.all_passed(),
           std::to_string(doc.claims.size()) + " claims" +
               (bad.empty() ? ", all pass" : ", failing: " + bad));
  } catch (const std::exception& e) {
    report(3, "claim suite", false, e.what());
  }
}

void criterion_diagram() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t bad = 0;
  std::string detail;
  try {
    std::vector<std::string> all = kPuiseuxFamilies;
    all.push_back("family:lexcone");
    for (const std::string& spec : all) {
      DiagramAudit audit = diagram_audit(Family::parse(spec), 50);
      if (!audit.consistent) {
        ++bad;
        if (detail.empty())
          detail = spec + ": " + (audit.violations.empty()
                                      ? "inconsistent"
                                      : audit.violations.front());
      }
    }
  } catch (const std::exception& e) {
    report(4, "diagram audit", false, e.what());
    return;
  }
  long ms = elapsed_ms(t0);
  report(4, "diagram audit", bad == 0 && ms <= 60000,
         "8 families audited at depth 50, " + std::to_string(bad) +
             " inconsistent" + (detail.empty() ? "" : " (" + detail + ")") +
             ", " + std::to_string(ms) + " ms");
}

struct MutationGuard {
  explicit MutationGuard(OracleMutation m) {
    testing::set_oracle_mutation(m);
  }
  ~MutationGuard() { testing::set_oracle_mutation(OracleMutation::None); }
};

bool harness_detects(OracleMutation m, std::string* how) {
  MutationGuard guard(m);
  try {
    ReportDocument doc = run_claim_suite({});
    for (const ClaimRecord& c : doc.claims)
      if (!c.passed) {
        *how = "claim " + c.id + " fails";
        return true;
      }
  } catch (const std::exception& e) {
    *how = std::string("claim suite aborts: ") + e.what();
    return true;
  }
  try {
    CrosscheckResult r = crosscheck_family(Family::build(FamilyTag::FNotAa),
                                           {});
    if (r.disagreements > 0) {
      *how = "differential crosscheck disagrees at " +
             r.first_counterexample->str();
      return true;
    }
  } catch (const std::exception& e) {
    *how = std::string("crosscheck aborts: ") + e.what();
    return true;
  }
  return false;
}

void criterion_mutations() {
  struct Case {
    OracleMutation m;
    const char* name;
  };
  const Case cases[] = {
      {OracleMutation::NfNotAfDropPositivity,
       "nf-not-af oracle accepts a zero dyadic tail"},
      {OracleMutation::AllowNegativeRemainder,
       "structured oracle ignores the remainder sign"},
      {OracleMutation::FNotAaDropRay,
       "f-not-aa oracle loses the q >= 1 ray"},
  };
  std::size_t detected = 0;
  std::string evidence;
  for (const Case& c : cases) {
    std::string how;
    bool hit = harness_detects(c.m, &how);
    if (hit) ++detected;
    evidence += std::string(c.name) + " -> " +
                (hit ? "detected (" + how + "); " : "NOT DETECTED; ");
  }
  report(5, "mutation sensitivity", detected == 3, evidence);
}

}  // namespace

int main() {
  criterion_differential();
  criterion_atom_sets();
  criterion_claim_suite();
  criterion_diagram();
  criterion_mutations();
  std::cout << (g_failures == 0 ? "acceptance: all criteria pass"
                                : "acceptance: FAILURES PRESENT")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
