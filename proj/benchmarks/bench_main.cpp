#include <benchmark/benchmark.h>

#include <random>

#include "mot2/burnside.hpp"
#include "mot2/mackey.hpp"

using namespace mot2;

namespace {

const std::vector<std::string> kGroups = {"C2", "S3", "D8", "A4", "S4"};

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(f, static_cast<long long>(rng() % 19) - 9);
  return m;
}

void BM_RankRational(benchmark::State& state) {
  const Matrix m = random_matrix(Field::rational(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->RangeMultiplier(2)->Range(8, 64);

void BM_RankPrime(benchmark::State& state) {
  const Matrix m = random_matrix(Field::prime(1000003), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankPrime)->RangeMultiplier(2)->Range(8, 128);

// t^n - 1 over Q: one factor per divisor of n
void BM_FactorCyclotomic(benchmark::State& state) {
  const Field q = Field::rational();
  Vector c(static_cast<std::size_t>(state.range(0)) + 1, Scalar::zero(q));
  c.front() = Scalar(q, -1LL);
  c.back() = Scalar::one(q);
  const Polynomial f(q, c);
  for (auto _ : state) benchmark::DoNotOptimize(factor(f));
}
BENCHMARK(BM_FactorCyclotomic)->Arg(12)->Arg(24)->Arg(36);

void BM_CrossedBurnside(benchmark::State& state) {
  const FiniteGroup g = catalog_group(kGroups[static_cast<std::size_t>(state.range(0))]);
  state.SetLabel(g.name());
  for (auto _ : state) benchmark::DoNotOptimize(crossed_burnside(g, Field::rational()));
}
BENCHMARK(BM_CrossedBurnside)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_PrimitiveIdempotents(benchmark::State& state) {
  const FiniteGroup g = catalog_group(kGroups[static_cast<std::size_t>(state.range(0))]);
  const Field f = state.range(1) == 0 ? Field::rational() : Field::prime(static_cast<std::uint64_t>(state.range(1)));
  state.SetLabel(g.name() + " " + f.to_string());
  const auto x = crossed_burnside(g, f);
  for (auto _ : state) benchmark::DoNotOptimize(primitive_idempotents(x.algebra));
}
BENCHMARK(BM_PrimitiveIdempotents)
    ->ArgsProduct({{0, 1, 2, 3, 4}, {0, 2, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_HomSpace(benchmark::State& state) {
  const FiniteGroup g = catalog_group(kGroups[static_cast<std::size_t>(state.range(0))]);
  state.SetLabel(g.name());
  auto model = CosetModel::left_sets(g);
  const auto m = linearize(model.cosets(trivial_subgroup(g)), Field::rational());
  for (auto _ : state) benchmark::DoNotOptimize(hom_space(m, m));
}
BENCHMARK(BM_HomSpace)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_YoshidaKernel(benchmark::State& state) {
  const FiniteGroup g = catalog_group(kGroups[static_cast<std::size_t>(state.range(0))]);
  state.SetLabel(g.name());
  for (auto _ : state) benchmark::DoNotOptimize(classical_yoshida_kernel_check(g, Field::prime(2)));
}
BENCHMARK(BM_YoshidaKernel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_MackeyTable(benchmark::State& state) {
  const FiniteGroup g = catalog_group(kGroups[static_cast<std::size_t>(state.range(0))]);
  state.SetLabel(g.name());
  auto model = CosetModel::left_sets(g);
  const auto x = GSet::cosets(model, whole_group(g));
  const auto y = GSet::cosets(model, trivial_subgroup(g));
  for (auto _ : state) benchmark::DoNotOptimize(hom_decategorify(x, y, Field::rational()));
}
BENCHMARK(BM_MackeyTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
