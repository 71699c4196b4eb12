// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "puiseux/families.hpp"
#include "puiseux/numbers.hpp"
#include "puiseux/sequences.hpp"

using namespace puiseux;

TEST_CASE("spec grammar round-trip and parameter validation") {
  CHECK(Family::parse("family:nf-not-af{p=7}").str() ==
        "family:nf-not-af{p=7}");
  CHECK(Family::parse("family:f-not-aa").str() == "family:f-not-aa");
  CHECK_THROWS_AS(Family::parse("pow-denom{p=3}"), std::invalid_argument);
  CHECK_THROWS_AS(Family::parse("family:pow-denom{p=4}"),
                  std::invalid_argument);  // p must be an odd prime
  CHECK_THROWS_AS(Family::parse("family:nf-not-af{p=5}"),
                  std::invalid_argument);  // needs p >= 7
  CHECK_THROWS_AS(Family::parse("family:af-not-f{l=0}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(Family::parse("family:grams{x=1}"), std::invalid_argument);
  CHECK_THROWS_AS(Family::parse("family:unknown"), std::invalid_argument);
}

TEST_CASE("tagged atom invariants over the first 100 indices") {
  for (FamilyTag tag :
       {FamilyTag::AfNotF, FamilyTag::AfNotNf, FamilyTag::NaNotF,
        FamilyTag::Grams}) {
    Family f = Family::build(tag, tag == FamilyTag::AfNotF ||
                                          tag == FamilyTag::AfNotNf
                                      ? 1
                                      : 0);
    std::set<Int> primes;
    for (std::size_t n = 1; n <= 100; ++n) {
      TaggedAtom a = f.tagged_atom(n);
      CHECK(a.index == n);
      CHECK(a.value.is_positive());
      // The private prime divides the denominator exactly once and
      // belongs to no other atom.
      CHECK(padic_valuation(a.value, a.private_prime).value == -1);
      CHECK(primes.insert(a.private_prime).second);
      CHECK(f.private_prime_index(a.private_prime) == n);
      CHECK(f.member(a.value).is_member());
    }
  }
}

TEST_CASE("af-not-f pool primes exceed the dyadic numerators") {
  Family f = Family::build(FamilyTag::AfNotF, 1);
  for (std::size_t n = 1; n <= 60; ++n) {
    TaggedAtom a = f.tagged_atom(n);
    Rat r = a.value * Rat(a.private_prime);  // the dyadic r_n > 1
    CHECK(r > Rat(1));
    CHECK(Int(a.private_prime) > r.num());
    CHECK(in_partition_pool(1, a.private_prime.convert_to<uint64_t>()));
  }
}

TEST_CASE("af-not-nf atoms follow 1 - 1/2^n over fresh pool primes") {
  Family f = Family::build(FamilyTag::AfNotNf, 1);
  CHECK(f.tagged_atom(1).value == Rat(1, 6));
  CHECK(f.tagged_atom(2).value == Rat(3, 28));
  CHECK(f.tagged_atom(3).value == Rat(7, 104));
  CHECK(f.tagged_atom(4).value == Rat(15, 304));
  for (std::size_t n = 1; n <= 40; ++n) {
    TaggedAtom a = f.tagged_atom(n);
    Int pw = Int(1) << n;
    CHECK(a.value == Rat(pw - 1, pw * a.private_prime));
    // Guard: the prime never divides 2^n - 1, so the value stays in
    // lowest terms with the private prime visible.
    CHECK(pw % a.private_prime != 1);
  }
}

TEST_CASE("na-not-f atoms keep the odd part over the power of two") {
  Family f = Family::build(FamilyTag::NaNotF);
  CHECK(f.claimed_atoms(2) == std::vector<Rat>{Rat(1, 3), Rat(3, 10)});
  for (std::size_t n = 2; n <= 40; ++n) {
    TaggedAtom a = f.tagged_atom(n);
    Rat scaled = a.value * Rat(a.private_prime);
    // scaled = o/l2(o) for an odd o > 1.
    CHECK(scaled.num() % 2 == 1);
    CHECK((scaled.den() & (scaled.den() - 1)) == 0);
    CHECK(scaled.den() < scaled.num());
    CHECK(scaled.num() < 2 * scaled.den());
  }
}

TEST_CASE("truncation goldens") {
  CHECK(Family::build(FamilyTag::AfNotF, 1).truncate(2).generators() ==
        std::vector<Rat>{Rat(3, 7), Rat(1, 2), Rat(2, 3), Rat(1)});
  CHECK(Family::build(FamilyTag::PowDenom, 3).truncate(3).generators() ==
        std::vector<Rat>{Rat(1, 9), Rat(1, 3), Rat(1, 2), Rat(1)});
  CHECK(Family::build(FamilyTag::Grams).truncate(2).generators() ==
        std::vector<Rat>{Rat(1, 20), Rat(1, 6), Rat(1, 2), Rat(1)});
}

TEST_CASE("membership goldens") {
  Family nf7 = Family::build(FamilyTag::NfNotAf, 7);
  CHECK(nf7.member(Rat(1, 2)).is_member());
  CHECK(nf7.member(Rat(1, 7)).is_member());
  CHECK(nf7.member(Rat(5, 14)).is_nonmember());  // 1/2 - 1/7
  CHECK(nf7.divides(Rat(1, 7), Rat(1, 2)).is_nonmember());

  Family af = Family::build(FamilyTag::AfNotF, 1);
  CHECK(af.member(Rat(1, 3)).is_nonmember());
  CHECK(af.member(Rat(2, 3)).is_member());
  CHECK(af.member(Rat(7, 6)).is_member());  // 1/2 + 2/3
  MembershipResult m = af.member(Rat(7, 6));
  CHECK(m.certificate->sum() == Rat(7, 6));

  Family fa = Family::build(FamilyTag::FNotAa);
  CHECK(fa.member(Rat(3, 2)).is_member());
  CHECK(fa.member(Rat(1, 5)).is_member());
  CHECK(fa.member(Rat(7, 10)).is_nonmember());  // < 1 with even denominator
  CHECK(fa.atomic_part_member(Rat(8, 15)));
  CHECK_FALSE(fa.atomic_part_member(Rat(1, 9)));  // v_3 = -2
  CHECK_FALSE(fa.atomic_part_member(Rat(3, 2)));
}

TEST_CASE("divides rejects non-members") {
  Family af = Family::build(FamilyTag::AfNotF, 1);
  CHECK_THROWS_AS(af.divides(Rat(1, 3), Rat(1)), std::invalid_argument);
}

TEST_CASE("lexcone membership and divisibility") {
  CHECK(Family::lexcone_member(-5, 2));
  CHECK(Family::lexcone_member(3, 0));
  CHECK(Family::lexcone_member(0, 0));
  CHECK_FALSE(Family::lexcone_member(-1, 0));
  CHECK_FALSE(Family::lexcone_member(4, -1));
  CHECK(Family::lexcone_divides({1, 0}, {-5, 2}));
  CHECK_FALSE(Family::lexcone_divides({0, 1}, {3, 0}));
  CHECK_THROWS_AS(Family::lexcone_divides({-1, 0}, {0, 0}),
                  std::invalid_argument);
  Family lex = Family::build(FamilyTag::LexCone);
  CHECK_THROWS_AS(lex.truncate(3), std::invalid_argument);
  CHECK_THROWS_AS(lex.claimed_atoms(1), std::invalid_argument);
}

TEST_CASE("atom refutations produce explicit decompositions") {
  Family pd = Family::build(FamilyTag::PowDenom, 3);
  auto [x, y] = refute_atom(pd, Rat(1, 9));
  CHECK(x + y == Rat(1, 9));
  CHECK(pd.member(x).is_member());
  CHECK(pd.member(y).is_member());

  Family fa = Family::build(FamilyTag::FNotAa);
  auto [u, v] = refute_atom(fa, Rat(1));
  CHECK(u + v == Rat(1));
  CHECK(fa.member(u).is_member());
  CHECK(fa.member(v).is_member());
}

TEST_CASE("claimed atoms survive truncated decomposition search") {
  for (const char* spec :
       {"family:pow-denom{p=3}", "family:af-not-f{l=1}",
        "family:nf-not-af{p=7}", "family:af-not-nf{l=1}", "family:f-not-aa",
        "family:na-not-f", "family:grams"}) {
    Family f = Family::parse(spec);
    for (const Rat& a : f.claimed_atoms(5)) {
      CAPTURE(spec);
      CAPTURE(a.str());
      CHECK(is_atom_truncated(f, a, 10).is_atom);
    }
  }
}

TEST_CASE("support descriptors and infimum valuations") {
  Family pd3 = Family::build(FamilyTag::PowDenom, 3);
  CHECK(pd3.support_descriptor().kind == SupportSet::Kind::Finite);
  CHECK(pd3.inf_vp(2) == InfValuation::finite(-1));
  CHECK(pd3.inf_vp(3).minus_infinity);
  Family fa = Family::build(FamilyTag::FNotAa);
  CHECK(fa.support_descriptor().kind == SupportSet::Kind::AllPrimes);
  CHECK(fa.inf_vp(5).minus_infinity);
  Family af1 = Family::build(FamilyTag::AfNotF, 1);
  CHECK(af1.support_descriptor().kind == SupportSet::Kind::CofinalInPool);
  CHECK(af1.support_descriptor().pool == 1);
}
