#include <benchmark/benchmark.h>

#include <vector>

#include "mediator/consistency.hpp"
#include "mediator/implement.hpp"
#include "mediator/infograph.hpp"
#include "mediator/model.hpp"

using namespace mediator;

namespace {

// n states on a zig-zag: player a pools {0,1},{2,3},..., player b pools
// {1,2},{3,4},... . With `blocks` > 1 every block-th b-link is cut, giving
// several components. The mediator pools states with equal index mod 3.
Model zigzag(std::size_t n, std::size_t blocks) {
  std::vector<std::vector<StateId>> a;
  std::vector<std::vector<StateId>> b{{0}};
  for (StateId s = 0; s < n; s += 2) a.push_back(s + 1 < n ? std::vector<StateId>{s, s + 1} : std::vector<StateId>{s});
  std::size_t cut = blocks > 1 ? n / blocks : n + 1;
  for (StateId s = 1; s < n; s += 2) {
    if (s + 1 < n && (s + 1) % cut != 0) {
      b.push_back({s, s + 1});
    } else {
      b.push_back({s});
      if (s + 1 < n) b.push_back({s + 1});
    }
  }
  std::vector<std::vector<StateId>> f(3);
  for (StateId s = 0; s < n; ++s) f[s % 3].push_back(s);
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) names.push_back("w" + std::to_string(100000 + s));
  std::vector<Player> players{{"a", Partition(n, a)}, {"b", Partition(n, b)}};
  return Model(names, players, Partition(n, f), std::vector<Rational>(n, Rational(1, static_cast<long>(n))));
}

std::vector<Rational> labelling(std::size_t n) {
  std::vector<Rational> f(n);
  for (StateId s = 0; s < n; ++s) f[s] = Rational(static_cast<long>(s % 3) + 1, 7);
  return f;
}

void BM_SolveF(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Model m = zigzag(n, static_cast<std::size_t>(state.range(1)));
  InfoGraph g = build_graph(m);
  PLFunction phi = pl_from_function(g, labelling(n));
  for (auto _ : state) benchmark::DoNotOptimize(solve_f(g, m.mediator(), phi));
}
BENCHMARK(BM_SolveF)->Args({1000, 1})->Args({1000, 50})->Args({10000, 1})->Args({10000, 500});

void BM_DecideImplementable(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Model m = zigzag(n, 10);
  auto f = labelling(n);
  std::vector<Rational> rest;
  for (const auto& v : f) rest.push_back(Rational(1) - v);
  SignalKernel k({"s", "s0"}, {f, rest});
  JointBelief jb = joint_posterior(m, k, 0);
  for (auto _ : state) benchmark::DoNotOptimize(decide_implementable(m, jb));
}
BENCHMARK(BM_DecideImplementable)->Arg(100)->Arg(1000);

}  // namespace
