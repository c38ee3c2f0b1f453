#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "mediator/potential.hpp"

using namespace mediator;

namespace {

// Identical-interest game with `players` players and `actions` actions each.
StrategicGame common_payoff(std::size_t players, std::size_t actions) {
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> acts;
  std::size_t profiles = 1;
  for (std::size_t i = 0; i < players; ++i) {
    ids.push_back("p" + std::to_string(i));
    acts.emplace_back();
    for (std::size_t a = 0; a < actions; ++a) acts.back().push_back("a" + std::to_string(a));
    profiles *= actions;
  }
  std::vector<std::vector<Rational>> payoffs(profiles);
  for (std::size_t k = 0; k < profiles; ++k) payoffs[k].assign(players, Rational(static_cast<long>((k * 7919) % 23)));
  return StrategicGame(ids, acts, payoffs);
}

void BM_RecoverPotential(benchmark::State& state) {
  StrategicGame game = common_payoff(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(recover_potential(game));
}
BENCHMARK(BM_RecoverPotential)->Args({2, 3})->Args({3, 3})->Args({4, 4})->Args({5, 4});

}  // namespace
