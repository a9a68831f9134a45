#include <benchmark/benchmark.h>

#include "milnor/kernels.hpp"
#include "milnor/semigroup.hpp"

namespace {

using namespace milnor;

kernels::SimplexLattice simplex(long k) {
  return {{{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(1), Int(k), Int(k * k)}},
          {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}}};
}

MCone wide_cone(long k) { return MCone::generated_by({{1, 0, 0}, {0, 1, 0}, {1, Int(k), Int(k * k)}}); }

std::vector<MVec> candidates(long k) {
  std::vector<MVec> out;
  for (const auto& p : kernels::serial::parallelepiped_points(simplex(k))) out.emplace_back(p);
  return out;
}

template <class F>
void points(benchmark::State& st, F f) {
  auto s = simplex(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(f(s));
}

template <class F>
void mask(benchmark::State& st, F f) {
  auto c = wide_cone(st.range(0));
  auto cand = candidates(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(f(cand, c));
}

void BM_points_serial(benchmark::State& st) { points(st, kernels::serial::parallelepiped_points); }
void BM_points_parallel(benchmark::State& st) { points(st, kernels::parallel::parallelepiped_points); }
void BM_mask_serial(benchmark::State& st) { mask(st, kernels::serial::irreducible_mask); }
void BM_mask_parallel(benchmark::State& st) { mask(st, kernels::parallel::irreducible_mask); }

}  // namespace

BENCHMARK(BM_points_serial)->Arg(8)->Arg(32);
BENCHMARK(BM_points_parallel)->Arg(8)->Arg(32);
BENCHMARK(BM_mask_serial)->Arg(4)->Arg(8);
BENCHMARK(BM_mask_parallel)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
