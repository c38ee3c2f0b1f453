#include "mediator/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mediator {

Partition::Partition(std::size_t num_states, std::vector<std::vector<StateId>> cells)
    : cells_(std::move(cells)), cell_of_(num_states, 0) {
  for (auto& cell : cells_) std::sort(cell.begin(), cell.end());
  std::sort(cells_.begin(), cells_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    for (StateId s : cells_[c]) cell_of_[s] = c;
  }
}

Partition Partition::discrete(std::size_t num_states) {
  std::vector<std::vector<StateId>> cells;
  for (StateId s = 0; s < num_states; ++s) cells.push_back({s});
  return Partition(num_states, std::move(cells));
}

Partition Partition::trivial(std::size_t num_states) {
  std::vector<StateId> all(num_states);
  std::iota(all.begin(), all.end(), StateId{0});
  if (all.empty()) return Partition(0, {});
  return Partition(num_states, {std::move(all)});
}

Model::Model(std::vector<std::string> states, std::vector<Player> players, Partition mediator,
             std::vector<Rational> prior)
    : states_(std::move(states)),
      players_(std::move(players)),
      mediator_(std::move(mediator)),
      prior_(std::move(prior)) {}

std::optional<StateId> Model::find_state(const std::string& name) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), name);
  if (it == states_.end() || *it != name) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

StateId Model::state(const std::string& name) const {
  if (auto id = find_state(name)) return *id;
  throw Error(ErrorKind::UnknownState, "unknown state '" + name + "'");
}

std::optional<PlayerId> Model::find_player(const std::string& name) const {
  for (PlayerId p = 0; p < players_.size(); ++p) {
    if (players_[p].id == name) return p;
  }
  return std::nullopt;
}

PlayerId Model::player_id(const std::string& name) const {
  if (auto id = find_player(name)) return *id;
  throw Error(ErrorKind::UnknownPlayer, "unknown player '" + name + "'");
}

namespace {

// Validates raw cells against the sorted state list; appends violations and
// returns the index-based cells (possibly partial when invalid).
std::vector<std::vector<StateId>> check_partition(
    const std::string& owner, const std::vector<std::vector<std::string>>& raw_cells,
    const std::vector<std::string>& states, std::vector<Violation>& out) {
  std::vector<std::vector<StateId>> cells;
  std::vector<int> seen_in(states.size(), -1);
  for (std::size_t c = 0; c < raw_cells.size(); ++c) {
    const auto& raw = raw_cells[c];
    if (raw.empty()) {
      out.push_back({ViolationKind::EmptyCell, owner + ": cell " + std::to_string(c) + " is empty"});
      continue;
    }
    std::vector<StateId> cell;
    for (const auto& name : raw) {
      auto it = std::lower_bound(states.begin(), states.end(), name);
      if (it == states.end() || *it != name) {
        out.push_back({ViolationKind::UnknownState,
                       owner + ": cell " + std::to_string(c) + " names unknown state '" + name + "'"});
        continue;
      }
      auto id = static_cast<StateId>(it - states.begin());
      if (seen_in[id] >= 0) {
        out.push_back({ViolationKind::OverlappingCells,
                       owner + ": state '" + name + "' appears in cells " +
                           std::to_string(seen_in[id]) + " and " + std::to_string(c)});
        continue;
      }
      seen_in[id] = static_cast<int>(c);
      cell.push_back(id);
    }
    if (!cell.empty()) cells.push_back(std::move(cell));
  }
  for (StateId s = 0; s < states.size(); ++s) {
    if (seen_in[s] < 0) {
      out.push_back({ViolationKind::UncoveredState,
                     owner + ": state '" + states[s] + "' is not covered by any cell"});
    }
  }
  return cells;
}

}  // namespace

Model validate_model(const RawModel& raw) {
  std::vector<Violation> violations;

  std::vector<std::string> states = raw.states;
  std::sort(states.begin(), states.end());
  for (std::size_t i = 1; i < states.size(); ++i) {
    if (states[i] == states[i - 1]) {
      violations.push_back({ViolationKind::DuplicateState, "state '" + states[i] + "' listed twice"});
    }
  }
  states.erase(std::unique(states.begin(), states.end()), states.end());
  if (states.empty()) {
    violations.push_back({ViolationKind::UncoveredState, "state space is empty"});
  }

  std::vector<std::optional<Rational>> prior(states.size());
  for (const auto& [name, value] : raw.prior) {
    auto it = std::lower_bound(states.begin(), states.end(), name);
    if (it == states.end() || *it != name) {
      violations.push_back({ViolationKind::UnknownState, "prior names unknown state '" + name + "'"});
      continue;
    }
    auto id = static_cast<StateId>(it - states.begin());
    if (prior[id]) {
      violations.push_back({ViolationKind::DuplicateState, "prior lists state '" + name + "' twice"});
      continue;
    }
    prior[id] = value;
    if (!value.is_positive()) {
      violations.push_back({ViolationKind::ZeroOrNegativePrior,
                            "prior of state '" + name + "' is " + value.str()});
    }
  }
  bool prior_complete = true;
  Rational total;
  for (StateId s = 0; s < states.size(); ++s) {
    if (!prior[s]) {
      prior_complete = false;
      violations.push_back({ViolationKind::MissingPrior, "no prior for state '" + states[s] + "'"});
    } else {
      total += *prior[s];
    }
  }
  if (prior_complete && !states.empty() && total != Rational(1)) {
    violations.push_back({ViolationKind::PriorNotNormalized, "prior sums to " + total.str()});
  }

  if (raw.players.size() < 2) {
    violations.push_back({ViolationKind::FewerThanTwoPlayers,
                          "need at least 2 players, got " + std::to_string(raw.players.size())});
  }
  std::vector<Player> players;
  std::set<std::string> player_ids;
  for (const auto& [id, cells] : raw.players) {
    if (!player_ids.insert(id).second) {
      violations.push_back({ViolationKind::DuplicatePlayer, "player '" + id + "' listed twice"});
      continue;
    }
    auto checked = check_partition("player " + id, cells, states, violations);
    players.push_back({id, Partition()});
    if (violations.empty()) players.back().partition = Partition(states.size(), std::move(checked));
  }
  auto mediator_cells = check_partition("mediator", raw.mediator, states, violations);

  if (!violations.empty()) throw ValidationError(std::move(violations));

  std::sort(players.begin(), players.end(),
            [](const Player& a, const Player& b) { return a.id < b.id; });
  std::vector<Rational> prior_values;
  prior_values.reserve(states.size());
  for (auto& p : prior) prior_values.push_back(*p);
  Partition mediator(states.size(), std::move(mediator_cells));
  return Model(std::move(states), std::move(players), std::move(mediator), std::move(prior_values));
}

Rational JointBelief::diagonal(StateId state, PlayerId player) const {
  const auto& belief = at(state, player);
  return belief ? (*belief)[state] : Rational(0);
}

std::vector<Violation> joint_belief_violations(const Model& model, const JointBelief& jb) {
  std::vector<Violation> out;
  const std::size_t n = model.num_states();
  auto where = [&](StateId s, PlayerId i) {
    return "(state " + model.state_name(s) + ", player " + model.player(i).id + ")";
  };

  if (jb.num_states() != n || jb.num_players() != model.num_players()) {
    out.push_back({ViolationKind::MissingEntry, "joint belief dimensions do not match the model"});
    return out;
  }

  for (StateId s = 0; s < n; ++s) {
    for (PlayerId i = 0; i < model.num_players(); ++i) {
      const auto& belief = jb.at(s, i);
      if (!belief) continue;
      if (belief->size() != n) {
        out.push_back({ViolationKind::MissingEntry, where(s, i) + ": distribution has wrong length"});
        continue;
      }
      const auto& cell = model.partition(i).cell_containing(s);
      Rational total;
      for (StateId t = 0; t < n; ++t) {
        const Rational& p = (*belief)[t];
        if (p.sign() < 0) {
          out.push_back({ViolationKind::NegativeProbability,
                         where(s, i) + ": probability of " + model.state_name(t) + " is " + p.str()});
        }
        if (!p.is_zero() && !std::binary_search(cell.begin(), cell.end(), t)) {
          out.push_back({ViolationKind::SupportOutsideCell,
                         where(s, i) + ": support includes " + model.state_name(t) +
                             " outside the player's cell"});
        }
        total += p;
      }
      if (total != Rational(1)) {
        out.push_back({ViolationKind::NotNormalized, where(s, i) + ": sums to " + total.str()});
      }
    }
  }
  if (!out.empty()) return out;

  for (PlayerId i = 0; i < model.num_players(); ++i) {
    for (const auto& cell : model.partition(i).cells()) {
      for (StateId s : cell) {
        if (jb.at(s, i) != jb.at(cell.front(), i)) {
          out.push_back({ViolationKind::CellInconsistent,
                         where(s, i) + ": entry differs from " + where(cell.front(), i) +
                             " in the same cell"});
        }
      }
    }
  }

  for (StateId s = 0; s < n; ++s) {
    std::optional<PlayerId> positive;
    std::optional<PlayerId> zero;
    for (PlayerId i = 0; i < model.num_players(); ++i) {
      (jb.diagonal(s, i).is_positive() ? positive : zero) = i;
    }
    if (positive && zero) {
      out.push_back({ViolationKind::ConditionIViolated,
                     "state " + model.state_name(s) + ": player " + model.player(*positive).id +
                         " assigns it positive probability but player " + model.player(*zero).id +
                         " does not"});
    }
  }

  for (StateId s = 0; s < n; ++s) {
    for (PlayerId i = 0; i < model.num_players(); ++i) {
      for (PlayerId j = i + 1; j < model.num_players(); ++j) {
        const auto& cell_j = model.partition(j).cell_containing(s);
        for (StateId t : model.partition(i).cell_containing(s)) {
          if (t <= s || !std::binary_search(cell_j.begin(), cell_j.end(), t)) continue;
          Rational di_t = jb.diagonal(t, i);
          Rational dj_t = jb.diagonal(t, j);
          if (di_t.is_zero() || dj_t.is_zero()) continue;
          if (jb.diagonal(s, i) * dj_t != jb.diagonal(s, j) * di_t) {
            out.push_back({ViolationKind::ConditionIIViolated,
                           "states " + model.state_name(s) + ", " + model.state_name(t) +
                               ": likelihood ratio differs between players " + model.player(i).id +
                               " and " + model.player(j).id});
          }
        }
      }
    }
  }
  return out;
}

JointBelief validate_joint_belief(const Model& model, JointBelief jb) {
  auto violations = joint_belief_violations(model, jb);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return jb;
}

JointBelief validate_joint_belief(const Model& model, const RawJointBelief& raw) {
  const std::size_t n = model.num_states();
  std::vector<Violation> violations;
  JointBelief jb(n, model.num_players());
  std::vector<bool> present(n * model.num_players(), false);

  for (const auto& [state_name, row] : raw.entries) {
    auto s = model.find_state(state_name);
    if (!s) {
      violations.push_back({ViolationKind::UnknownState,
                            "joint belief names unknown state '" + state_name + "'"});
      continue;
    }
    for (const auto& [player_name, entry] : row) {
      auto i = model.find_player(player_name);
      if (!i) {
        violations.push_back({ViolationKind::UnknownPlayer,
                              "joint belief names unknown player '" + player_name + "'"});
        continue;
      }
      present[*s * model.num_players() + *i] = true;
      if (!entry) continue;
      Distribution dist(n);
      for (const auto& [target, p] : *entry) {
        auto t = model.find_state(target);
        if (!t) {
          violations.push_back({ViolationKind::UnknownState,
                                "belief at (" + state_name + ", " + player_name +
                                    ") names unknown state '" + target + "'"});
          continue;
        }
        dist[*t] = p;
      }
      jb.at(*s, *i) = std::move(dist);
    }
  }
  for (StateId s = 0; s < n; ++s) {
    for (PlayerId i = 0; i < model.num_players(); ++i) {
      if (!present[s * model.num_players() + i]) {
        violations.push_back({ViolationKind::MissingEntry, "no entry for (state " +
                                                               model.state_name(s) + ", player " +
                                                               model.player(i).id + ")"});
      }
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return validate_joint_belief(model, std::move(jb));
}

SignalKernel::SignalKernel(std::vector<std::string> signals, std::vector<std::vector<Rational>> table)
    : signals_(std::move(signals)), table_(std::move(table)) {}

std::size_t SignalKernel::signal(const std::string& name) const {
  for (std::size_t k = 0; k < signals_.size(); ++k) {
    if (signals_[k] == name) return k;
  }
  throw Error(ErrorKind::UnknownSignal, "unknown signal '" + name + "'");
}

std::vector<Violation> kernel_violations(const Model& model, const SignalKernel& kernel) {
  std::vector<Violation> out;
  const std::size_t n = model.num_states();
  std::set<std::string> names;
  for (const auto& name : kernel.signals()) {
    if (!names.insert(name).second) {
      out.push_back({ViolationKind::DuplicateSignal, "signal '" + name + "' listed twice"});
    }
  }
  for (std::size_t k = 0; k < kernel.num_signals(); ++k) {
    if (kernel.row(k).size() != n) {
      out.push_back({ViolationKind::RowNotStochastic,
                     "signal '" + kernel.signal_name(k) + "' does not cover every state"});
      return out;
    }
  }
  if (kernel.num_signals() == 0) {
    out.push_back({ViolationKind::RowNotStochastic, "kernel has no signals"});
    return out;
  }
  for (StateId s = 0; s < n; ++s) {
    Rational total;
    for (std::size_t k = 0; k < kernel.num_signals(); ++k) {
      const Rational& p = kernel.prob(k, s);
      if (p.sign() < 0) {
        out.push_back({ViolationKind::NegativeKernelEntry, "tau(" + kernel.signal_name(k) + "|" +
                                                              model.state_name(s) + ") = " + p.str()});
      }
      total += p;
    }
    if (total != Rational(1)) {
      out.push_back({ViolationKind::RowNotStochastic,
                     "tau(.|" + model.state_name(s) + ") sums to " + total.str()});
    }
  }
  for (const auto& cell : model.mediator().cells()) {
    for (std::size_t k = 0; k < kernel.num_signals(); ++k) {
      for (StateId s : cell) {
        if (kernel.prob(k, s) != kernel.prob(k, cell.front())) {
          out.push_back({ViolationKind::NotFMeasurable,
                         "tau(" + kernel.signal_name(k) + "|" + model.state_name(s) + ") != tau(" +
                             kernel.signal_name(k) + "|" + model.state_name(cell.front()) +
                             ") within one mediator cell"});
        }
      }
    }
  }
  return out;
}

void validate_kernel(const Model& model, const SignalKernel& kernel) {
  auto violations = kernel_violations(model, kernel);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

SignalKernel uninformative_kernel(const Model& model) {
  return SignalKernel({"s"}, {std::vector<Rational>(model.num_states(), Rational(1))});
}

Rational signal_probability(const Model& model, const SignalKernel& kernel, std::size_t signal) {
  if (signal >= kernel.num_signals()) {
    throw Error(ErrorKind::UnknownSignal, "signal index out of range");
  }
  Rational total;
  for (StateId s = 0; s < model.num_states(); ++s) total += model.prior(s) * kernel.prob(signal, s);
  return total;
}

Belief bayes_posterior(const Model& model, const SignalKernel& kernel, std::size_t signal,
                       StateId state, PlayerId player) {
  if (signal >= kernel.num_signals()) {
    throw Error(ErrorKind::UnknownSignal, "signal index out of range");
  }
  if (state >= model.num_states()) throw Error(ErrorKind::UnknownState, "state index out of range");
  if (player >= model.num_players()) {
    throw Error(ErrorKind::UnknownPlayer, "player index out of range");
  }
  const auto& cell = model.partition(player).cell_containing(state);
  Rational denominator;
  for (StateId t : cell) denominator += model.prior(t) * kernel.prob(signal, t);
  if (denominator.is_zero()) return std::nullopt;
  Distribution posterior(model.num_states());
  for (StateId t : cell) posterior[t] = model.prior(t) * kernel.prob(signal, t) / denominator;
  return posterior;
}

JointBelief joint_posterior(const Model& model, const SignalKernel& kernel, std::size_t signal) {
  if (signal_probability(model, kernel, signal).is_zero()) {
    throw Error(ErrorKind::SignalHasZeroProbability,
                "signal '" + kernel.signal_name(signal) + "' has zero probability");
  }
  JointBelief jb(model.num_states(), model.num_players());
  for (StateId s = 0; s < model.num_states(); ++s) {
    for (PlayerId i = 0; i < model.num_players(); ++i) {
      jb.at(s, i) = bayes_posterior(model, kernel, signal, s, i);
    }
  }
  return jb;
}

}  // namespace mediator
