#pragma once

#include <utility>

#include "mediator/generator.hpp"
#include "mediator/model.hpp"
#include "mediator/potential.hpp"

// The two worked instances (a four-state negotiation game and a five-state,
// two-player example) plus small games and posterior families used by the
// demo command, tests and benchmarks. States are "w1".., players "1", "2".
namespace mediator::fixtures {

// P1 = {{w1,w2},{w3},{w4}}, P2 = {{w1},{w2},{w3,w4}}, F = {{w1,w3},{w2,w4}},
// uniform prior.
Model negotiation_model();

// Player 1 believes (p, 1-p, 0, 0) on {w1,w2}; player 2 believes
// (0, 0, q, 1-q) on {w3,w4}; everyone else is fully informed.
JointBelief negotiation_belief(const Model& model, const Rational& p, const Rational& q);

enum class Action { Attack, Compromise };

// Payoffs (player 1, player 2) at state w_k (k = 1..4).
std::pair<Rational, Rational> negotiation_payoff(int state, Action player1, Action player2);

// P1 = {{w1,w2},{w3},{w4,w5}}, P2 = {{w1,w2,w3},{w4},{w5}},
// F = {{w1,w4},{w2,w3,w5}}, uniform prior.
Model example1_model();

// Posteriors without a mediator (uniform prior).
JointBelief example1_table1(const Model& model);
// Posteriors after the mediator's signal.
JointBelief example1_table2(const Model& model);
// The signalled beliefs with player 1 at w4, w5 believing (0, 0, 0, 1/5, 4/5).
JointBelief example1_table2_modified(const Model& model);
// tau(s|.) = (1/5, 2/5, 2/5, 1/5, 2/5), complement on s0.
SignalKernel example1_kernel();

// Two states, two players who learn nothing, discrete mediator partition,
// uniform prior.
Model coin_model();
// Both players believe (p, 1-p).
JointBelief coin_belief(const Model& model, const Rational& p);

PosteriorFamily family_pp_yes();   // {(2/3,1/3),(1/3,2/3)} around (1/2,1/2)
PosteriorFamily family_pp_no();    // {(2/3,1/3)}
PosteriorFamily family_spp_yes();  // {(2/3,1/3),(1/3,2/3),(1/2,1/2)}
PosteriorFamily family_spp_no();   // {(1/2,1/2),(1,0)}

StrategicGame prisoners_dilemma();
StrategicGame matching_pennies();

}  // namespace mediator::fixtures
