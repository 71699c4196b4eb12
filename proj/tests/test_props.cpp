// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>

#include "puiseux/props.hpp"

using namespace puiseux;

namespace {

std::string verdict_vector(const std::vector<PropertyStatus>& sts) {
  std::string s;
  for (const PropertyStatus& st : sts) {
    switch (st.kind) {
      case VerdictKind::Proven: s += 'P'; break;
      case VerdictKind::ProvenOnSample: s += 'S'; break;
      case VerdictKind::Refuted: s += 'R'; break;
      case VerdictKind::UnknownAtDepth: s += 'U'; break;
    }
  }
  return s;
}

}  // namespace

TEST_CASE("verdict vectors match the classification") {
  // Order: antimatter, atomic, Furstenberg, quasi-F, almost-F, nearly-F,
  // quasi-atomic, almost-atomic, nearly-atomic.
  const std::map<std::string, std::string> expected = {
      {"family:pow-denom{p=3}", "RRRPRRPRR"},
      {"family:af-not-f{l=1}", "RRRPPSPUU"},
      {"family:nf-not-af{p=7}", "RRRPRSPRR"},
      {"family:af-not-nf{l=1}", "RRRPPRPUU"},
      {"family:f-not-aa", "RRPPPPPRR"},
      {"family:na-not-f", "RRRPPSPSS"},
      {"family:grams", "RPPPPPPPP"},
      {"family:lexcone", "RRPPPPRRR"},
  };
  for (const auto& [spec, want] : expected) {
    CAPTURE(spec);
    DiagramAudit audit = diagram_audit(Family::parse(spec), 30);
    CHECK(verdict_vector(audit.statuses) == want);
    CAPTURE(audit.violations.empty() ? "" : audit.violations.front());
    CHECK(audit.consistent);
  }
}

TEST_CASE("quasi-atomic witness identity and verifier") {
  Family f = Family::build(FamilyTag::PowDenom, 3);
  QuasiAtomicWitness w = quasi_atomic_witness(f, Rat(5, 9), Rat(1, 2));
  CHECK(w.b + w.c == Rat(w.k) * w.a);
  CHECK(w.k == 10);  // n(b) d(a)
  CHECK(verify_quasi_atomic(f, w));
  w.c += Rat(1, 9);  // tamper: identity breaks
  CHECK_FALSE(verify_quasi_atomic(f, w));
}

TEST_CASE("quasi-Furstenberg witness leaves an undivided remainder") {
  Family f = Family::build(FamilyTag::PowDenom, 3);
  QuasiFurstenbergWitness w = quasi_furstenberg_witness(f, Rat(7, 27));
  CHECK(verify_quasi_furstenberg(f, w));
  // a divides b + c but not c.
  CHECK(f.member(w.b + w.c - w.a).is_member());
  bool a_divides_c =
      !(w.c - w.a).is_negative() && f.member(w.c - w.a).is_member();
  CHECK_FALSE(a_divides_c);
}

TEST_CASE("Furstenberg closed forms") {
  Family af = Family::build(FamilyTag::AfNotF, 1);
  CHECK(furstenberg_witness(af, Rat(1)).kind == VerdictKind::Refuted);
  CHECK(furstenberg_witness(af, Rat(1, 4)).kind == VerdictKind::Refuted);
  FurstenbergStatus up = furstenberg_witness(af, Rat(3, 2));
  CHECK(up.kind == VerdictKind::Proven);
  CHECK(af.member(Rat(3, 2) - *up.atom).is_member());

  Family an = Family::build(FamilyTag::AfNotNf, 1);
  CHECK(furstenberg_witness(an, Rat(1, 4)).kind == VerdictKind::Refuted);
  CHECK(furstenberg_witness(an, Rat(1, 2)).kind == VerdictKind::Proven);

  Family fa = Family::build(FamilyTag::FNotAa);
  FurstenbergStatus fs = furstenberg_witness(fa, Rat(17, 10));
  CHECK(fs.kind == VerdictKind::Proven);
  CHECK(*fs.atom == Rat(1, 3));

  Family na = Family::build(FamilyTag::NaNotF);
  CHECK(furstenberg_witness(na, Rat(1, 2)).kind == VerdictKind::Refuted);
  CHECK(furstenberg_witness(na, Rat(4, 3)).kind == VerdictKind::Proven);
}

TEST_CASE("almost-Furstenberg witnesses verify and tampering fails") {
  Family an = Family::build(FamilyTag::AfNotNf, 1);
  AlmostFurstenbergWitness w = almost_furstenberg_witness(an, Rat(1, 8));
  REQUIRE(w.kind == VerdictKind::Proven);
  CHECK(w.c == Rat(7, 8));
  CHECK(verify_almost_furstenberg(an, w));
  AlmostFurstenbergWitness bad = w;
  bad.c += Rat(1, 16);  // no longer matches the atomic decomposition
  CHECK_FALSE(verify_almost_furstenberg(an, bad));

  Family nf = Family::build(FamilyTag::NfNotAf, 7);
  CHECK(almost_furstenberg_witness(nf, Rat(1, 2)).kind ==
        VerdictKind::Refuted);
}

TEST_CASE("nearly-Furstenberg refuter golden examples") {
  Family an = Family::build(FamilyTag::AfNotNf, 1);
  NearlyFurstenbergRefutation r1 = nearly_furstenberg_refute(an, Rat(1, 2));
  CHECK(r1.b == Rat(1, 8));
  CHECK(r1.verified);
  NearlyFurstenbergRefutation r2 = nearly_furstenberg_refute(an, Rat(1, 6));
  CHECK(r2.b == Rat(1, 4));
  CHECK(r2.verified);
  // A shift with dyadic part >= 1 is beaten by b = 1/2 outright.
  NearlyFurstenbergRefutation r3 = nearly_furstenberg_refute(an, Rat(3, 2));
  CHECK(r3.b == Rat(1, 2));
  CHECK(verify_nearly_furstenberg_refutation(an, r3));
}

TEST_CASE("almost-atomic total decision") {
  Family fa = Family::build(FamilyTag::FNotAa);
  CHECK(almost_atomic_decide(fa, Rat(3, 2)).kind == VerdictKind::Refuted);
  CHECK(almost_atomic_decide(fa, Rat(7, 5)).kind == VerdictKind::Proven);
  CHECK(almost_atomic_decide(fa, Rat(0)).kind == VerdictKind::Proven);
}

TEST_CASE("nearly-atomic factorization") {
  Family na = Family::build(FamilyTag::NaNotF);
  AtomicFactorization f0 = nearly_atomic_factor(na, Rat(0));
  CHECK(f0.atom == Rat(1, 3));
  CHECK(f0.multiplier == 3);
  AtomicFactorization f1 = nearly_atomic_factor(na, Rat(5, 4));
  CHECK(f1.total == Rat(9, 4));
  CHECK(f1.total == Rat(f1.multiplier) * f1.atom);
  CHECK(verify_atomic_factorization(na, f1));
}

TEST_CASE("nonisomorphism witnesses") {
  CHECK(nonisomorphism_witness(Family::build(FamilyTag::PowDenom, 3),
                               Family::build(FamilyTag::PowDenom, 5))
            .proven);
  CHECK(nonisomorphism_witness(Family::build(FamilyTag::AfNotF, 1),
                               Family::build(FamilyTag::AfNotF, 2))
            .proven);
  // Same family twice: the invariants cannot separate it from itself.
  CHECK_FALSE(nonisomorphism_witness(Family::build(FamilyTag::Grams),
                                     Family::build(FamilyTag::Grams))
                  .proven);
}

TEST_CASE("member samples stay inside the monoid") {
  Family af = Family::build(FamilyTag::AfNotF, 1);
  std::vector<Rat> sample = member_sample(af, 6, 40);
  CHECK(sample.size() >= 40);
  for (const Rat& q : sample) CHECK(af.member(q).is_member());
}
