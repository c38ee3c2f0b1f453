#include <doctest.h>

#include <variant>

#include "mediator/fixtures.hpp"
#include "mediator/potential.hpp"
#include "support/random_instances.hpp"

using namespace mediator;

TEST_CASE("profile numbering") {
  StrategicGame pd = fixtures::prisoners_dilemma();
  CHECK(pd.num_profiles() == 4);
  CHECK(pd.profile_key(1) == "C,D");
  CHECK(pd.index({1, 0}) == 2);
  CHECK(pd.profile(3) == Profile{1, 1});
  CHECK_THROWS_AS(StrategicGame({"a"}, {{"x"}, {"y"}}, {{Rational(0)}}), Error);
}

TEST_CASE("prisoner's dilemma potential") {
  StrategicGame pd = fixtures::prisoners_dilemma();
  auto r = recover_potential(pd);
  REQUIRE(std::holds_alternative<std::vector<Rational>>(r));
  const auto& g = std::get<std::vector<Rational>>(r);
  CHECK(g == std::vector<Rational>{Rational(0), Rational(1), Rational(1), Rational(2)});
  CHECK(!verify_potential(pd, g).has_value());
  CHECK(verify_potential(pd, {Rational(0), Rational(0), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("matching pennies has a nonzero four-cycle") {
  StrategicGame mp = fixtures::matching_pennies();
  auto r = recover_potential(mp);
  REQUIRE(std::holds_alternative<AdditiveCycle>(r));
  const auto& c = std::get<AdditiveCycle>(r);
  CHECK(c.vertices.size() == 5);
  CHECK(c.vertices.front() == c.vertices.back());
  CHECK(!c.sum.is_zero());
  DeviationGraph dg = build_deviation_graph(mp);
  CHECK(cycle_sum(dg.graph, c.vertices) == c.sum);
}

TEST_CASE("additive graph checks") {
  AdditiveGraph g;
  g.num_vertices = 3;
  g.edges = {{0, 1}, {1, 2}, {0, 2}};
  g.rho = {{{0, 1}, Rational(1)}, {{1, 2}, Rational(2)}, {{0, 2}, Rational(3)}};
  auto ok = check_inc_add(g);
  REQUIRE(std::holds_alternative<std::vector<Rational>>(ok));
  CHECK(std::get<std::vector<Rational>>(ok) == std::vector<Rational>{Rational(0), Rational(-1), Rational(-3)});

  g.rho[{0, 2}] = Rational(4);
  auto bad = check_inc_add(g);
  REQUIRE(std::holds_alternative<AdditiveCycle>(bad));
  CHECK(cycle_sum(g, std::get<AdditiveCycle>(bad).vertices) == std::get<AdditiveCycle>(bad).sum);

  g.rho[{2, 0}] = Rational(4);
  CHECK_THROWS_AS(check_inc_add(g), Error);
  CHECK_THROWS_AS(cycle_sum(g, {0, 0}), Error);
}

TEST_CASE("random games agree with the four-cycle condition") {
  testing_support::Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    StrategicGame game = trial % 3 == 0 ? testing_support::random_game(rng)
                                        : testing_support::random_potential_game(rng, trial % 3 == 2);
    auto r = recover_potential(game);
    bool potential = std::holds_alternative<std::vector<Rational>>(r);
    CHECK(potential == testing_support::four_cycle_oracle(game));
    if (potential) CHECK(!verify_potential(game, std::get<std::vector<Rational>>(r)).has_value());
  }
}
