#include <benchmark/benchmark.h>

#include <random>

#include "sts/census.hpp"
#include "sts/constructions.hpp"
#include "sts/holonomy.hpp"
#include "sts/sl2z.hpp"

namespace {

sts::Origami random_connected(int n, std::mt19937& rng) {
  std::vector<sts::Label> s(n), t(n);
  for (int i = 0; i < n; ++i) s[i] = t[i] = static_cast<sts::Label>(i);
  for (;;) {
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(t.begin(), t.end(), rng);
    sts::Perm ps(s), pt(t);
    if (sts::is_connected(ps, pt)) return sts::Origami(std::move(ps), std::move(pt));
  }
}

void BM_CanonicalKey(benchmark::State& state) {
  std::mt19937 rng(99);
  std::vector<sts::Origami> surfaces;
  for (int i = 0; i < 64; ++i)
    surfaces.push_back(random_connected(int(state.range(0)), rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sts::canonical_key(surfaces[i++ & 63]));
  }
}
BENCHMARK(BM_CanonicalKey)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CensusKeys(benchmark::State& state) {
  sts::CensusOptions opt;
  opt.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sts::census_keys(int(state.range(0)), opt));
  }
}
BENCHMARK(BM_CensusKeys)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_OrbitClosure(benchmark::State& state) {
  sts::Origami o = sts::l_shaped(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sts::orbit(o).size);
  }
}
BENCHMARK(BM_OrbitClosure)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_H2FamilyKeys(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sts::h2_family_keys(int(state.range(0))));
  }
}
BENCHMARK(BM_H2FamilyKeys)->Arg(12)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  std::mt19937 rng(7);
  auto records = sts::census(6);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sts::classify(records[i++ % records.size()].origami()));
  }
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
