#include <benchmark/benchmark.h>

#include "polyinf/numeric.hpp"
#include "polyinf/parser.hpp"

using namespace polyinf;

namespace {

const MultiPoly& motzkin() {
  static const MultiPoly f = parse_poly("x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1");
  return f;
}

const MultiPoly& valley() {
  static const MultiPoly f = parse_poly("(x*y - 1)^2 + y^2");
  return f;
}

numeric::PsiConfig config(const benchmark::State& st) {
  numeric::PsiConfig c;
  c.angular_samples = static_cast<int>(st.range(0));
  return c;
}

void BM_psi_parallel(benchmark::State& st) {
  auto c = config(st);
  for (auto _ : st) benchmark::DoNotOptimize(numeric::psi_sample(valley(), FeasibleSet::plane(), 100, c));
}
void BM_psi_serial(benchmark::State& st) {
  auto c = config(st);
  for (auto _ : st) benchmark::DoNotOptimize(numeric::serial::psi_sample(valley(), FeasibleSet::plane(), 100, c));
}

void BM_profile_parallel(benchmark::State& st) {
  numeric::PsiConfig c;
  for (auto _ : st)
    benchmark::DoNotOptimize(numeric::psi_profile(motzkin(), FeasibleSet::plane(), 10, 1000, st.range(0), c));
}
void BM_profile_serial(benchmark::State& st) {
  numeric::PsiConfig c;
  for (auto _ : st)
    benchmark::DoNotOptimize(numeric::serial::psi_profile(motzkin(), FeasibleSet::plane(), 10, 1000, st.range(0), c));
}

void BM_brute_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(numeric::brute_force_min(motzkin(), FeasibleSet::plane(), 5, st.range(0)));
}
void BM_brute_serial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(numeric::serial::brute_force_min(motzkin(), FeasibleSet::plane(), 5, st.range(0)));
}

void BM_curve_brute_parallel(benchmark::State& st) {
  auto s = FeasibleSet::curve(parse_poly("x^3 - y^2 - x"));
  MultiPoly f = parse_poly("x + y");
  for (auto _ : st) benchmark::DoNotOptimize(numeric::brute_force_min(f, s, 5, st.range(0)));
}
void BM_curve_brute_serial(benchmark::State& st) {
  auto s = FeasibleSet::curve(parse_poly("x^3 - y^2 - x"));
  MultiPoly f = parse_poly("x + y");
  for (auto _ : st) benchmark::DoNotOptimize(numeric::serial::brute_force_min(f, s, 5, st.range(0)));
}

}  // namespace

BENCHMARK(BM_psi_parallel)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_psi_serial)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_profile_parallel)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_profile_serial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_brute_parallel)->Arg(401)->Arg(801)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_brute_serial)->Arg(401)->Arg(801)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_curve_brute_parallel)->Arg(801)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_curve_brute_serial)->Arg(801)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
