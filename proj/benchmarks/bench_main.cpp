// Copyright 2026 The tpcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tpcalc/axioms.hpp"
#include "tpcalc/builders.hpp"
#include "tpcalc/decision.hpp"
#include "tpcalc/semantics.hpp"

namespace tpcalc {
namespace {

const auto Q = SemiringTag::Rational;

// Boolean color nested n times under the tensor: dim 2^(2^n).
Color nested_bool(int n) {
  Color c = bool_color();
  for (int i = 0; i < n; ++i) c = Color::tensor(c, bool_color());
  return c;
}

void BM_EvalFullSnake(benchmark::State& state) {
  const Color a = nested_bool(static_cast<int>(state.range(0)));
  const Diagram id = Diagram::id(a);
  const Diagram snake = seq(par(cup(a), id), par(id, cap(a)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_full(snake, Q));
  state.SetLabel("dim " + std::to_string(a.dim()));
}
BENCHMARK(BM_EvalFullSnake)->DenseRange(0, 3);

void BM_CompareSwitches(benchmark::State& state) {
  const Diagram not_gate = seq_all({mirror(Diagram::plus(Color::one(), Color::one())),
                                    Diagram::swap(Color::one(), Color::one()),
                                    Diagram::plus(Color::one(), Color::one())});
  const Diagram scale = Diagram::scal(from_int(Q, 3), bool_color());
  const Diagram a = switch_dup(not_gate, scale);
  const Diagram b = switch_single(not_gate, scale);
  for (auto _ : state) benchmark::DoNotOptimize(compare_full(a, b, Q));
}
BENCHMARK(BM_CompareSwitches);

void BM_NormalizeOr(benchmark::State& state) {
  const Diagram d = or_parallel();
  for (auto _ : state) benchmark::DoNotOptimize(normalize(d, SemiringTag::Bool));
}
BENCHMARK(BM_NormalizeOr);

void BM_SynthesizeIdentity(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Obj x(n, bool_color());
  const SemMatrix m = SemMatrix::identity(Q, dim(x));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(m, x, x));
}
BENCHMARK(BM_SynthesizeIdentity)->DenseRange(1, 3);

void BM_FuzzSingleSemiring(benchmark::State& state) {
  FuzzOptions o;
  o.iterations = 5;
  o.semirings = {SemiringTag::Nat};
  for (auto _ : state) benchmark::DoNotOptimize(fuzz(o));
}
BENCHMARK(BM_FuzzSingleSemiring)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tpcalc

BENCHMARK_MAIN();
