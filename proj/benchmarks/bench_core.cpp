// Copyright 2026 The reescalc authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "reescalc/builtins.hpp"
#include "reescalc/diff.hpp"
#include "reescalc/integral.hpp"
#include "reescalc/scenario.hpp"

using namespace rees;

namespace {

void BM_PolyMultiply(benchmark::State& state) {
  Field q(0);
  const std::vector<std::string> vars = {"z", "x", "y"};
  Poly f = parse_poly(q, vars, "(z + x + y + 1)^4");
  Poly g = parse_poly(q, vars, "(z^2 - x*y + 2)^3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_PolyMultiply);

void BM_DiffSaturate(benchmark::State& state) {
  Chart chart = Chart::make(Field(static_cast<uint32_t>(state.range(0))),
                            {"z", "x"});
  ReesAlg g = parse_algebra(chart, "[ z^3 + z*x^4 + x^7 @ 3 ]");
  for (auto _ : state) {
    benchmark::DoNotOptimize(diff_saturate(g));
  }
}
BENCHMARK(BM_DiffSaturate)->Arg(0)->Arg(2)->Arg(7);

void BM_AlmostReesNormalize(benchmark::State& state) {
  Chart chart = Chart::make(Field(0), {"x", "y"});
  ReesAlg g = parse_algebra(chart, "[ x @ 2, y @ 3 ]");
  for (auto _ : state) {
    benchmark::DoNotOptimize(almost_rees_normalize(g));
  }
}
BENCHMARK(BM_AlmostReesNormalize);

void BM_NewtonMembership(benchmark::State& state) {
  Field q(0);
  const std::vector<std::string> vars = {"x", "y", "z"};
  Ideal ideal;
  for (const char* g : {"x^4", "y^5", "z^6", "x*y*z"}) {
    ideal.gens.push_back(parse_poly(q, vars, g));
  }
  Poly m = parse_poly(q, vars, "x^2*y^2*z^2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(monomial_ic_membership(m, ideal));
  }
}
BENCHMARK(BM_NewtonMembership);

void BM_BuiltinCounterexample(benchmark::State& state) {
  ScenarioDoc doc = load_scenario(find_builtin("char2-counterexample").json_text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(doc));
  }
}
BENCHMARK(BM_BuiltinCounterexample);

}  // namespace

BENCHMARK_MAIN();
