#include <benchmark/benchmark.h>

#include <vector>

#include "forcelab/automorphisms.hpp"
#include "forcelab/harness/generators.hpp"
#include "forcelab/harness/universe.hpp"
#include "forcelab/quotient.hpp"

using namespace forcelab;

namespace {

std::vector<Cond0> sample0(const Skeleton& s, unsigned size, std::uint32_t bound, std::size_t n) {
  std::vector<Cond0> out;
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(gen_cond0(s, k, size, bound));
  return out;
}

void BM_Leq0(benchmark::State& st) {
  const Skeleton s = skel_h();
  auto ps = sample0(s, static_cast<unsigned>(st.range(0)), 3, 256);
  std::size_t k = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(leq0(ps[k % 256], ps[(k * 7 + 3) % 256]));
    ++k;
  }
}
BENCHMARK(BM_Leq0)->Arg(2)->Arg(8);

void BM_Union0(benchmark::State& st) {
  const Skeleton s = skel_h();
  auto ps = sample0(s, static_cast<unsigned>(st.range(0)), 3, 256);
  std::size_t k = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(union0(s, ps[k % 256], ps[(k * 7 + 3) % 256]));
    ++k;
  }
}
BENCHMARK(BM_Union0)->Arg(2)->Arg(8);

void BM_Apply1(benchmark::State& st) {
  const Skeleton s = skel_a();
  Rng rng(5);
  std::vector<std::pair<Aut1, Cond1>> cases;
  for (int k = 0; k < 256; ++k) {
    Aut1 pi = gen_aut1(s, rng, 3, 3);
    cases.push_back({pi, fill_into_domain(rng, gen_cond1(s, rng, 3, 3), pi)});
  }
  std::size_t k = 0;
  for (auto _ : st) {
    const auto& [pi, p] = cases[k++ % cases.size()];
    benchmark::DoNotOptimize(apply1(pi, p));
  }
}
BENCHMARK(BM_Apply1);

void BM_Homog0(benchmark::State& st) {
  const Skeleton s = skel_h();
  auto ps = sample0(s, 3, 2, 64);
  std::size_t k = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(homog0(s, ps[k % 64], ps[(k * 5 + 1) % 64], 0, FlimTree{}));
    ++k;
  }
}
BENCHMARK(BM_Homog0);

void BM_AllTrees(benchmark::State& st) {
  const Skeleton s = skel_a();
  for (auto _ : st) benchmark::DoNotOptimize(all_trees(s, static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_AllTrees)->Arg(4)->Arg(5);

void BM_Rho1(benchmark::State& st) {
  const Skeleton s = skel_a();
  auto cs = all_cond1(s, 2);
  std::size_t k = 0;
  for (auto _ : st) benchmark::DoNotOptimize(rho1(cs[k++ % cs.size()], 3, 2));
}
BENCHMARK(BM_Rho1);

}  // namespace

BENCHMARK_MAIN();
