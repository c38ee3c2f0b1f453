#include <doctest.h>

#include <vector>

#include "mediator/fixtures.hpp"
#include "mediator/generator.hpp"
#include "mediator/simplex.hpp"
#include "support/random_instances.hpp"

using namespace mediator;

namespace {

void check_martingale(const Model& m, const SignalKernel& k) {
  Distribution sum(m.num_states());
  for (std::size_t s = 0; s < k.num_signals(); ++s) {
    Rational pr = signal_probability(m, k, s);
    if (pr.is_zero()) continue;
    auto post = posterior_over_omega(m, k, s);
    for (StateId w = 0; w < m.num_states(); ++w) sum[w] += pr * post[w];
  }
  CHECK(sum == m.prior());
}

}  // namespace

TEST_CASE("simplex basics") {
  // min x0 + x1 s.t. x0 + 2 x1 = 4
  auto r = minimize({{Rational(1), Rational(2)}}, {Rational(4)}, {Rational(1), Rational(1)});
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.objective == Rational(2));
  CHECK(r.x == std::vector<Rational>{Rational(0), Rational(2)});
  CHECK(r.dual.size() == 1);
  CHECK(r.dual[0] * Rational(4) == r.objective);

  // x0 + x1 = -1 has no nonnegative solution.
  auto inf = minimize({{Rational(1), Rational(1)}}, {Rational(-1)}, {Rational(0), Rational(0)});
  REQUIRE(inf.status == LPStatus::Infeasible);
  CHECK(inf.farkas[0] * Rational(-1) < Rational(0));
  CHECK(inf.farkas[0] >= Rational(0));

  auto unb = minimize({{Rational(1), Rational(-1)}}, {Rational(0)}, {Rational(-1), Rational(0)});
  CHECK(unb.status == LPStatus::Unbounded);
}

TEST_CASE("PP and SPP fixtures") {
  auto yes = check_pp(fixtures::family_pp_yes());
  REQUIRE(yes.holds);
  CHECK(yes.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  auto no = check_pp(fixtures::family_pp_no());
  REQUIRE(!no.holds);
  CHECK(no.witness == std::vector<Rational>{Rational(1), Rational(-2)});
  for (const auto& member : fixtures::family_pp_no().members) CHECK(expectation(member, no.witness) >= Rational(0));
  CHECK(expectation(fixtures::family_pp_no().prior, no.witness) < Rational(0));

  auto spp = check_spp(fixtures::family_spp_yes());
  CHECK(spp.holds);
  for (const auto& w : spp.weights) CHECK(w.is_positive());

  auto fam = fixtures::family_spp_no();
  auto spp_no = check_spp(fam);
  REQUIRE(!spp_no.holds);
  CHECK(spp_no.pp.holds);
  REQUIRE(spp_no.failing_member.has_value());
  CHECK(*spp_no.failing_member == 1);
  CHECK(spp_no.witness == std::vector<Rational>{Rational(1), Rational(-1)});
  CHECK(expectation(fam.prior, spp_no.witness).is_zero());
  CHECK(expectation(fam.members[1], spp_no.witness) > Rational(0));
}

TEST_CASE("invalid families") {
  PosteriorFamily empty{{Rational(1, 2), Rational(1, 2)}, {}};
  CHECK_THROWS_AS(validate_family(empty), Error);
  PosteriorFamily bad{{Rational(1, 2), Rational(1, 2)}, {{Rational(1, 2), Rational(1, 3)}}};
  CHECK_THROWS_AS(validate_family(bad), Error);
  PosteriorFamily zero_prior{{Rational(1), Rational(0)}, {{Rational(1), Rational(0)}}};
  CHECK_THROWS_AS(validate_family(zero_prior), Error);
}

TEST_CASE("family synthesis satisfies the martingale identity") {
  Model m = fixtures::coin_model();
  auto r = synthesize_from_family(m, fixtures::family_spp_yes(), Semantics::SPP);
  REQUIRE(r.failure == MultiFailure::None);
  REQUIRE(r.kernel.has_value());
  CHECK(r.kernel->num_signals() == 3);
  check_martingale(m, *r.kernel);
  for (std::size_t s = 0; s < r.kernel->num_signals(); ++s) {
    CHECK(posterior_over_omega(m, *r.kernel, s) == r.posteriors[s]);
  }

  auto degraded = synthesize_from_family(m, fixtures::family_spp_no(), Semantics::SPP, true);
  CHECK(degraded.degraded);
  REQUIRE(degraded.kernel.has_value());
  check_martingale(m, *degraded.kernel);

  auto strict = synthesize_from_family(m, fixtures::family_spp_no(), Semantics::SPP);
  CHECK(strict.failure == MultiFailure::NotSPP);
  CHECK(!strict.kernel.has_value());
}

TEST_CASE("multi-belief synthesis") {
  Model m = fixtures::coin_model();
  std::vector<JointBelief> beliefs{fixtures::coin_belief(m, Rational(2, 3)), fixtures::coin_belief(m, Rational(1, 3))};
  auto r = synthesize_multi(m, beliefs, Semantics::PP);
  REQUIRE(r.failure == MultiFailure::None);
  CHECK(r.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  check_martingale(m, *r.kernel);
  for (std::size_t k = 0; k < beliefs.size(); ++k) {
    std::size_t s = r.member_posterior[k];
    CHECK(verify_exact(m, *r.kernel, s, beliefs[k]).empty());
  }
  std::vector<JointBelief> one{fixtures::coin_belief(m, Rational(2, 3))};
  CHECK(synthesize_multi(m, one, Semantics::PP).failure == MultiFailure::NotPP);
  CHECK(to_string(MultiFailure::NotSPP) == "NotSPP");
}

TEST_CASE("LP verdicts match vertex enumeration on small families") {
  testing_support::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto fam = testing_support::random_family(rng, testing_support::uniform(rng, 2, 4),
                                              testing_support::uniform(rng, 1, 4));
    auto oracle = testing_support::vertex_oracle(fam);
    auto spp = check_spp(fam);
    CHECK(spp.pp.holds == oracle.pp);
    CHECK(spp.holds == oracle.spp);
  }
}
