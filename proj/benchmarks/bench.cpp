// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#include <benchmark/benchmark.h>

#include "puiseux/families.hpp"
#include "puiseux/fg.hpp"
#include "puiseux/props.hpp"

using namespace puiseux;

static void BM_StructuredMember(benchmark::State& state) {
  Family f = Family::build(FamilyTag::AfNotF, 1);
  f.tagged_atom(16);  // warm the atom cache
  Rat q = Rat(1, 2) + f.tagged_atom(9).value + f.tagged_atom(16).value;
  for (auto _ : state) benchmark::DoNotOptimize(f.member(q).verdict);
}
BENCHMARK(BM_StructuredMember);

static void BM_FgMemberDp(benchmark::State& state) {
  FgPresentation p = FgPresentation::parse("fg:1/2,1/3,1/9,1/27,5/6");
  Rat q(41, 54);
  p.member(q);  // warm the reachability table
  for (auto _ : state) benchmark::DoNotOptimize(p.member(q).verdict);
}
BENCHMARK(BM_FgMemberDp);

static void BM_TaggedAtomStream(benchmark::State& state) {
  for (auto _ : state) {
    Family f = Family::build(FamilyTag::AfNotNf, 1);
    benchmark::DoNotOptimize(f.tagged_atom(32).value);
  }
}
BENCHMARK(BM_TaggedAtomStream);

static void BM_QuasiFurstenbergWitness(benchmark::State& state) {
  Family f = Family::build(FamilyTag::PowDenom, 3);
  Rat b(7, 27);
  for (auto _ : state)
    benchmark::DoNotOptimize(quasi_furstenberg_witness(f, b).c);
}
BENCHMARK(BM_QuasiFurstenbergWitness);

BENCHMARK_MAIN();
