#include <benchmark/benchmark.h>

#include "symeq/symeq.hpp"

namespace {

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  symeq::SearchOptions opt;
  opt.threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) {
    auto set = symeq::enumerate(n, k, opt);
    benchmark::DoNotOptimize(set.solutions.data());
    state.counters["solutions"] = static_cast<double>(set.solutions.size());
    state.counters["nodes"] = static_cast<double>(set.nodes);
  }
}
BENCHMARK(BM_Enumerate)
    ->Args({5, 3, 1})
    ->Args({5, 4, 1})
    ->Args({6, 4, 1})
    ->Args({6, 5, 1})
    ->Args({7, 5, 1})
    ->Args({7, 5, 4})
    ->Unit(benchmark::kMillisecond);

void BM_VSequence(benchmark::State& state) {
  const auto method = static_cast<symeq::VMethod>(state.range(1));
  for (auto _ : state) {
    auto table = symeq::v_sequence(static_cast<std::size_t>(state.range(0)), method);
    benchmark::DoNotOptimize(table.values.back().get_mpz_t());
  }
}
BENCHMARK(BM_VSequence)
    ->ArgsProduct({{12, 16, 20},
                   {static_cast<long>(symeq::VMethod::Definition), static_cast<long>(symeq::VMethod::Rec1),
                    static_cast<long>(symeq::VMethod::Rec2), static_cast<long>(symeq::VMethod::Rec3)}})
    ->Unit(benchmark::kMicrosecond);

void BM_Factorize(benchmark::State& state) {
  // Products of two primes near 2^(bits/2).
  const auto half = static_cast<unsigned long>(state.range(0) / 2);
  symeq::Natural p, q;
  const symeq::Natural base = symeq::power(2, half);
  mpz_nextprime(p.get_mpz_t(), base.get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), symeq::Natural(base + base / 3).get_mpz_t());
  const symeq::Natural m = p * q;
  for (auto _ : state) {
    auto f = symeq::factorize(m);
    benchmark::DoNotOptimize(f.data());
  }
}
BENCHMARK(BM_Factorize)->Arg(32)->Arg(48)->Arg(64)->Arg(80)->Unit(benchmark::kMicrosecond);

void BM_MultiplicativePartitions(benchmark::State& state) {
  const symeq::Natural m = symeq::factorial(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symeq::multiplicative_partitions(m).get_mpz_t());
}
BENCHMARK(BM_MultiplicativePartitions)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
