#include "mediator/fixtures.hpp"

#include <string>

namespace mediator::fixtures {

namespace {

using Cells = std::vector<std::vector<std::string>>;

std::vector<std::string> state_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back("w" + std::to_string(k));
  return out;
}

Model uniform_model(std::size_t n, Cells p1, Cells p2, Cells mediator) {
  RawModel raw;
  raw.states = state_names(n);
  for (const auto& s : raw.states) raw.prior.emplace_back(s, Rational(1, static_cast<long>(n)));
  raw.players = {{"1", std::move(p1)}, {"2", std::move(p2)}};
  raw.mediator = std::move(mediator);
  return validate_model(raw);
}

Distribution dist(std::initializer_list<Rational> values) { return Distribution(values); }

Distribution point(std::size_t n, StateId s) {
  Distribution d(n);
  d[s] = Rational(1);
  return d;
}

// rows[state] = {player 1 belief, player 2 belief}
JointBelief table(const Model& model, const std::vector<std::pair<Distribution, Distribution>>& rows) {
  JointBelief jb(model.num_states(), 2);
  for (StateId s = 0; s < rows.size(); ++s) {
    jb.at(s, 0) = rows[s].first;
    jb.at(s, 1) = rows[s].second;
  }
  return validate_joint_belief(model, std::move(jb));
}

}  // namespace

Model negotiation_model() {
  return uniform_model(4, {{"w1", "w2"}, {"w3"}, {"w4"}}, {{"w1"}, {"w2"}, {"w3", "w4"}},
                       {{"w1", "w3"}, {"w2", "w4"}});
}

JointBelief negotiation_belief(const Model& model, const Rational& p, const Rational& q) {
  Distribution first = dist({p, Rational(1) - p, 0, 0});
  Distribution second = dist({0, 0, q, Rational(1) - q});
  return table(model, {{first, point(4, 0)}, {first, point(4, 1)}, {point(4, 2), second}, {point(4, 3), second}});
}

std::pair<Rational, Rational> negotiation_payoff(int state, Action player1, Action player2) {
  const Rational x = state <= 2 ? Rational(2) : Rational(3);
  const bool first_matrix = state == 1 || state == 3;
  const bool a1 = player1 == Action::Attack;
  const bool a2 = player2 == Action::Attack;
  if (first_matrix) {
    if (a1 && a2) return {2, -5};
    if (a1) return {x, -4};
    if (a2) return {-1, -1};
    return {0, 0};
  }
  if (a1 && a2) return {-5, 2};
  if (a1) return {-1, -1};
  if (a2) return {-4, x};
  return {0, 0};
}

Model example1_model() {
  return uniform_model(5, {{"w1", "w2"}, {"w3"}, {"w4", "w5"}}, {{"w1", "w2", "w3"}, {"w4"}, {"w5"}},
                       {{"w1", "w4"}, {"w2", "w3", "w5"}});
}

JointBelief example1_table1(const Model& model) {
  Rational h(1, 2);
  Rational t(1, 3);
  Distribution a = dist({h, h, 0, 0, 0});
  Distribution b = dist({t, t, t, 0, 0});
  Distribution c = dist({0, 0, 0, h, h});
  return table(model, {{a, b}, {a, b}, {point(5, 2), b}, {c, point(5, 3)}, {c, point(5, 4)}});
}

JointBelief example1_table2(const Model& model) {
  Distribution a = dist({Rational(1, 3), Rational(2, 3), 0, 0, 0});
  Distribution b = dist({Rational(1, 5), Rational(2, 5), Rational(2, 5), 0, 0});
  Distribution c = dist({0, 0, 0, Rational(1, 3), Rational(2, 3)});
  return table(model, {{a, b}, {a, b}, {point(5, 2), b}, {c, point(5, 3)}, {c, point(5, 4)}});
}

JointBelief example1_table2_modified(const Model& model) {
  JointBelief jb = example1_table2(model);
  Distribution c = dist({0, 0, 0, Rational(1, 5), Rational(4, 5)});
  jb.at(3, 0) = c;
  jb.at(4, 0) = c;
  return validate_joint_belief(model, std::move(jb));
}

SignalKernel example1_kernel() {
  std::vector<Rational> s = {Rational(1, 5), Rational(2, 5), Rational(2, 5), Rational(1, 5), Rational(2, 5)};
  std::vector<Rational> s0;
  for (const auto& v : s) s0.push_back(Rational(1) - v);
  return SignalKernel({"s", "s0"}, {s, s0});
}

Model coin_model() { return uniform_model(2, {{"w1", "w2"}}, {{"w1", "w2"}}, {{"w1"}, {"w2"}}); }

JointBelief coin_belief(const Model& model, const Rational& p) {
  Distribution d = dist({p, Rational(1) - p});
  return table(model, {{d, d}, {d, d}});
}

PosteriorFamily family_pp_yes() {
  Rational h(1, 2);
  return {{h, h}, {{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}}};
}

PosteriorFamily family_pp_no() {
  Rational h(1, 2);
  return {{h, h}, {{Rational(2, 3), Rational(1, 3)}}};
}

PosteriorFamily family_spp_yes() {
  Rational h(1, 2);
  return {{h, h}, {{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}, {h, h}}};
}

PosteriorFamily family_spp_no() {
  Rational h(1, 2);
  return {{h, h}, {{h, h}, {Rational(1), Rational(0)}}};
}

StrategicGame prisoners_dilemma() {
  // Profiles in order CC, CD, DC, DD.
  return StrategicGame({"1", "2"}, {{"C", "D"}, {"C", "D"}},
                       {{3, 3}, {1, 4}, {4, 1}, {2, 2}});
}

StrategicGame matching_pennies() {
  // Profiles in order HH, HT, TH, TT.
  return StrategicGame({"1", "2"}, {{"H", "T"}, {"H", "T"}},
                       {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
}

}  // namespace mediator::fixtures
