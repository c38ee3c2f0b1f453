#include <doctest.h>

#include <random>
#include <variant>

#include "mediator/consistency.hpp"
#include "mediator/fixtures.hpp"
#include "mediator/infograph.hpp"
#include "support/random_instances.hpp"

using namespace mediator;

namespace {

Model triangle_model() {
  // p0 sees {s0,s1}, p1 sees {s1,s2}; the mediator pools s0 and s2.
  std::vector<Player> players{{"p0", Partition(3, {{0, 1}, {2}})}, {"p1", Partition(3, {{0}, {1, 2}})}};
  return Model({"s0", "s1", "s2"}, players, Partition(3, {{0, 2}, {1}}),
               {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
}

PLFunction example_phi(const InfoGraph& g, const Rational& w4_over_w5) {
  EdgeLabels labels{{{0, 1}, Rational(1, 2)}, {{1, 2}, Rational(1)}, {{0, 2}, Rational(1, 2)},
                    {{3, 4}, w4_over_w5}};
  return PLFunction::from_labels(g, labels);
}

}  // namespace

TEST_CASE("reciprocity and label construction") {
  Model m = fixtures::example1_model();
  InfoGraph g = build_graph(m);
  EdgeLabels labels{{{0, 1}, Rational(1, 2)}, {{1, 2}, Rational(1)}, {{0, 2}, Rational(1, 2)}, {{3, 4}, Rational(1, 2)}};
  PLFunction phi = PLFunction::from_labels(g, labels);
  CHECK(phi(1, 0) == Rational(2));
  CHECK(phi(4, 3) == Rational(2));
  labels[{1, 0}] = Rational(3);
  CHECK(check_reciprocity(g, labels).has_value());
  CHECK_THROWS_AS(PLFunction::from_labels(g, labels), Error);
  EdgeLabels not_edge{{{0, 3}, Rational(1)}};
  CHECK_THROWS_AS(PLFunction::from_labels(g, not_edge), Error);
  EdgeLabels negative{{{0, 1}, Rational(-1)}, {{1, 2}, Rational(1)}, {{0, 2}, Rational(1)}, {{3, 4}, Rational(1)}};
  CHECK_THROWS_AS(PLFunction::from_labels(g, negative), Error);
  CHECK_THROWS_AS(phi(0, 3), Error);
}

TEST_CASE("consistent phi extends and solves") {
  Model m = fixtures::example1_model();
  InfoGraph g = build_graph(m);
  PLFunction phi = example_phi(g, Rational(1, 2));
  auto inc = check_inc(g, m.mediator(), phi);
  REQUIRE(std::holds_alternative<ExtendedPL>(inc));
  const auto& ext = std::get<ExtendedPL>(inc);
  CHECK(ext.label(0) == Rational(1));
  CHECK(ext.anchor(1) == 3);
  CHECK(ext.extend(2, 0) == Rational(2));
  CHECK(extend_pl(ext, 4, 3) == Rational(2));
  CHECK_THROWS_AS(ext.extend(0, 3), Error);
  CHECK(induced_component_distribution(ext, 0) ==
        Distribution{Rational(1, 5), Rational(2, 5), Rational(2, 5), Rational(0), Rational(0)});
  Distribution tail{Rational(0), Rational(0), Rational(0), Rational(1, 3), Rational(2, 3)};
  CHECK(induced_component_distribution(ext, 1) == tail);
  CHECK(induced_component_distribution(ext, 1, 4) == tail);
  CHECK_THROWS_AS(induced_component_distribution(ext, 5), Error);
  CHECK_THROWS_AS(induced_component_distribution(ext, 0, 4), Error);
  CHECK(!check_exc(g, m.mediator(), ext).has_value());

  auto f = solve_f(g, m.mediator(), phi);
  REQUIRE(std::holds_alternative<FLabeling>(f));
  const auto& values = std::get<FLabeling>(f).values;
  CHECK(values[1] == 2 * values[0]);
  CHECK(values[2] == values[1]);
  CHECK(values[3] == values[0]);
  CHECK(values[4] == values[1]);
}

TEST_CASE("F-cycle certificate") {
  Model m = triangle_model();
  InfoGraph g = build_graph(m);
  EdgeLabels labels{{{0, 1}, Rational(2)}, {{1, 2}, Rational(3, 4)}};
  PLFunction phi = PLFunction::from_labels(g, labels);
  auto inc = check_inc(g, m.mediator(), phi);
  REQUIRE(std::holds_alternative<Certificate>(inc));
  const auto& cert = std::get<Certificate>(inc);
  CHECK(cert.kind == CertificateKind::FCycle);
  CHECK(cert.product != Rational(1));
  CHECK(evaluate_certificate(g, m.mediator(), phi, cert) == cert.product);
  CHECK(cert.path == std::vector<StateId>{0, 1, 2});
  CHECK(cert.product == Rational(3, 2));

  auto oracle = brute_force_check(g, m.mediator(), phi, 6);
  REQUIRE(oracle.has_value());
  CHECK(oracle->kind == CertificateKind::FCycle);
}

TEST_CASE("F-loop certificate across components") {
  Model m = fixtures::example1_model();
  InfoGraph g = build_graph(m);
  PLFunction phi = example_phi(g, Rational(1, 4));
  auto inc = check_inc(g, m.mediator(), phi);
  REQUIRE(std::holds_alternative<ExtendedPL>(inc));
  auto cert = check_exc(g, m.mediator(), std::get<ExtendedPL>(inc));
  REQUIRE(cert.has_value());
  CHECK(cert->kind == CertificateKind::FLoop);
  CHECK(cert->product != Rational(1));
  CHECK(evaluate_certificate(g, m.mediator(), phi, *cert) == cert->product);
  auto f = solve_f(g, m.mediator(), phi);
  CHECK(std::holds_alternative<Certificate>(f));
}

TEST_CASE("malformed certificates are rejected") {
  Model m = fixtures::example1_model();
  InfoGraph g = build_graph(m);
  PLFunction phi = example_phi(g, Rational(1, 4));
  Certificate bogus{CertificateKind::FLoop, {}, {{0, 3}, {4, 1}}, Rational(1)};
  CHECK_THROWS_AS(evaluate_certificate(g, m.mediator(), phi, bogus), Error);
  Certificate short_path{CertificateKind::FCycle, {0, 3}, {}, Rational(1)};
  CHECK_THROWS_AS(evaluate_certificate(g, m.mediator(), phi, short_path), Error);
}

TEST_CASE("canonical form picks the smallest rotation") {
  Certificate loop{CertificateKind::FLoop, {}, {{4, 3}, {1, 0}}, Rational(2)};
  Certificate c = canonicalize(loop);
  CHECK(c.pairs.front().from <= 1);
  Certificate again = canonicalize(c);
  CHECK(again.pairs == c.pairs);
  CHECK(again.product == c.product);
}

TEST_CASE("random instances agree with the exhaustive oracle") {
  testing_support::Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = testing_support::uniform(rng, 2, 6);
    Model m = testing_support::random_model(rng, n, testing_support::uniform(rng, 2, 3));
    InfoGraph g = build_graph(m);
    PLFunction phi = testing_support::random_phi(rng, g, m.mediator(), trial % 2 == 0);
    auto fast = solve_f(g, m.mediator(), phi);
    auto slow = brute_force_check(g, m.mediator(), phi, 2 * n);
    CHECK(std::holds_alternative<FLabeling>(fast) == !slow.has_value());
    if (auto* cert = std::get_if<Certificate>(&fast)) {
      CHECK(evaluate_certificate(g, m.mediator(), phi, *cert) == cert->product);
      CHECK(cert->product != Rational(1));
    }
  }
}
