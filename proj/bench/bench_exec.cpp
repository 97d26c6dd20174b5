// Serial reference vs OpenMP for the enumeration-heavy kernels.
// The argument is the worker count; 1 runs the serial loop.

#include <benchmark/benchmark.h>

#include "triadcert/counterexample.hpp"
#include "triadcert/lemma.hpp"
#include "triadcert/oracle.hpp"

using namespace triadcert;

namespace {

// n diagonal-ish triads over GF(3): Condition U holds, so the whole
// projective space of F^n is scanned.
TriadList full_scan_instance(std::size_t n) {
  const FieldSpec f = FieldSpec::prime(3);
  std::vector<Triad> ts;
  for (std::size_t i = 0; i < n; ++i)
    ts.push_back({Vector::unit(f, n, i), Vector::unit(f, n, i), Vector::unit(f, n, i)});
  return TriadList(std::move(ts));
}

void BM_condition_u(benchmark::State& state) {
  const TriadList t = full_scan_instance(8);
  EnumerationOptions o;
  o.exec = Exec{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_u(t, o));
}

void BM_oracle_gf4(benchmark::State& state) {
  const TriadList t = builtin_example(FieldSpec::gf4());
  OracleOptions o;
  o.exec = Exec{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1(t, o));
}

void BM_subspaces(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(3);
  std::vector<Vector> xs;
  for (std::size_t i = 0; i < 4; ++i) xs.push_back(Vector::unit(f, 4, i));
  xs.push_back(Vector(f, {f.one(), f.one(), f.one(), f.one()}));
  EnumerationOptions o;
  o.exec = Exec{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(check_subspace_generalization(xs, xs, 2, o));
}

}  // namespace

BENCHMARK(BM_condition_u)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_gf4)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subspaces)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
