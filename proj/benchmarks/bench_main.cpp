#include <benchmark/benchmark.h>

#include "mckay/chartab.hpp"
#include "mckay/correspondence.hpp"
#include "mckay/cyclo.hpp"
#include "mckay/groups.hpp"

namespace {

void BM_CycMul(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  mckay::CycNum a = mckay::CycNum::root_of_unity(n, 1) + mckay::CycNum(3L);
  const mckay::CycNum b = mckay::CycNum::root_of_unity(n, 2) - mckay::CycNum::root_of_unity(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul)->Arg(12)->Arg(40)->Arg(120);

void BM_GroupClosure(benchmark::State& state) {
  const auto label = mckay::AdeLabel::parse("E8");
  for (auto _ : state) benchmark::DoNotOptimize(mckay::build_binary_polyhedral(label));
}
BENCHMARK(BM_GroupClosure)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const auto group = std::make_shared<const mckay::FiniteGroup>(
      mckay::build_binary_polyhedral(mckay::AdeLabel::parse("E8")));
  for (auto _ : state) benchmark::DoNotOptimize(mckay::character_table(group));
}
BENCHMARK(BM_CharacterTable)->Unit(benchmark::kMillisecond);

void BM_VerifyLocal(benchmark::State& state) {
  const auto model = mckay::build_local_model(mckay::AdeLabel::parse("E8"));
  for (auto _ : state) benchmark::DoNotOptimize(mckay::verify_local(model));
}
BENCHMARK(BM_VerifyLocal)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
