#include <benchmark/benchmark.h>

#include <random>

#include "cbkap/attack.hpp"
#include "cbkap/burau.hpp"
#include "cbkap/garside.hpp"
#include "cbkap/length.hpp"
#include "cbkap/protocol.hpp"

namespace {

using namespace cbkap;

std::vector<int> all_generators(int n) {
  std::vector<int> g;
  for (int i = 1; i < n; ++i) g.push_back(i);
  return g;
}

void BM_NormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto len = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  const auto w = random_word(n, len, all_generators(n), rng);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(w));
}
BENCHMARK(BM_NormalForm)->Args({6, 50})->Args({14, 50})->Args({14, 200});

void BM_ApproxLengthPublishedWord(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto inst = ttp_generate(parameter_set(static_cast<int>(state.range(0))), rng);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_length(inst.w_pub[k]));
    k = (k + 1) % inst.w_pub.size();
  }
}
BENCHMARK(BM_ApproxLengthPublishedWord)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_StarApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const auto ep = EvalPoint::random(n, 13, rng);
  const auto w = random_word(n, 400, all_generators(n), rng);
  for (auto _ : state) {
    auto acc = EvaluatedPair::identity(n, 13);
    star_apply_in_place(acc, w.letters(), ep);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.letters().size()));
}
BENCHMARK(BM_StarApply)->Arg(12)->Arg(14);

void BM_ProtocolRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto inst = ttp_generate(parameter_set(2), rng);
  for (auto _ : state) {
    const auto ka = make_key(inst, Side::kA, rng);
    const auto kb = make_key(inst, Side::kB, rng);
    benchmark::DoNotOptimize(shared_key(ka, make_public(kb, inst, Side::kB), inst, Side::kA));
    benchmark::DoNotOptimize(shared_key(kb, make_public(ka, inst, Side::kA), inst, Side::kB));
  }
}
BENCHMARK(BM_ProtocolRoundTrip)->Unit(benchmark::kMillisecond);

void BM_FullAttack(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto inst = ttp_generate(parameter_set(static_cast<int>(state.range(0))), rng);
  const auto strategy = static_cast<Strategy>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(full_attack(inst.w_pub, inst.v_pub, strategy));
}
BENCHMARK(BM_FullAttack)
    ->ArgsProduct({{1, 2},
                   {static_cast<int>(Strategy::kGreedy), static_cast<int>(Strategy::kBacktracking),
                    static_cast<int>(Strategy::kVariantII)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
