#include <benchmark/benchmark.h>

#include <random>

#include "mediator/generator.hpp"

using namespace mediator;

namespace {

PosteriorFamily family(std::size_t states, std::size_t members, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(0, 5);
  PosteriorFamily fam;
  fam.prior.assign(states, Rational(0));
  for (std::size_t k = 0; k < members; ++k) {
    Distribution d(states);
    Rational total;
    for (auto& v : d) {
      v = Rational(draw(rng) + (k == 0 ? 1 : 0));
      total += v;
    }
    for (auto& v : d) v /= total;
    for (std::size_t s = 0; s < states; ++s) fam.prior[s] += d[s] / Rational(static_cast<long>(members));
    fam.members.push_back(std::move(d));
  }
  return fam;
}

void BM_CheckPP(benchmark::State& state) {
  auto fam = family(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_pp(fam));
}
BENCHMARK(BM_CheckPP)->Args({4, 4})->Args({8, 16})->Args({16, 32});

void BM_CheckSPP(benchmark::State& state) {
  auto fam = family(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_spp(fam));
}
BENCHMARK(BM_CheckSPP)->Args({4, 4})->Args({8, 16});

}  // namespace
