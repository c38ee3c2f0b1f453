#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mediator/errors.hpp"
#include "mediator/rational.hpp"

namespace mediator {

using StateId = std::size_t;
using PlayerId = std::size_t;

// Dense probability vector over the model's states.
using Distribution = std::vector<Rational>;

// A player's belief at a state: a distribution, or nullopt for the empty
// marker (the zero vector assigned when the signal has zero likelihood on
// the player's cell).
using Belief = std::optional<Distribution>;

// Partition of {0, ..., n-1}. Cells are stored with members ascending and
// cells ordered by their smallest member.
class Partition {
 public:
  Partition() = default;
  // Precondition: `cells` is a partition of {0, ..., num_states-1}.
  Partition(std::size_t num_states, std::vector<std::vector<StateId>> cells);

  static Partition discrete(std::size_t num_states);
  static Partition trivial(std::size_t num_states);

  std::size_t num_states() const { return cell_of_.size(); }
  std::size_t size() const { return cells_.size(); }
  const std::vector<std::vector<StateId>>& cells() const { return cells_; }
  const std::vector<StateId>& cell(std::size_t index) const { return cells_[index]; }
  std::size_t cell_of(StateId state) const { return cell_of_[state]; }
  const std::vector<StateId>& cell_containing(StateId state) const {
    return cells_[cell_of_[state]];
  }
  bool same_cell(StateId a, StateId b) const { return cell_of_[a] == cell_of_[b]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<StateId>> cells_;
  std::vector<std::size_t> cell_of_;
};

struct Player {
  std::string id;
  Partition partition;

  friend bool operator==(const Player&, const Player&) = default;
};

// States, player partitions, mediator partition and common prior. States and
// players are indexed in lexicographic order of their identifiers.
//
// The constructor does not validate; use validate_model for raw input.
class Model {
 public:
  Model(std::vector<std::string> states, std::vector<Player> players, Partition mediator,
        std::vector<Rational> prior);

  std::size_t num_states() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(StateId state) const { return states_[state]; }
  std::optional<StateId> find_state(const std::string& name) const;
  // Throws Error(UnknownState).
  StateId state(const std::string& name) const;

  std::size_t num_players() const { return players_.size(); }
  const std::vector<Player>& players() const { return players_; }
  const Player& player(PlayerId id) const { return players_[id]; }
  std::optional<PlayerId> find_player(const std::string& name) const;
  // Throws Error(UnknownPlayer).
  PlayerId player_id(const std::string& name) const;

  const Partition& partition(PlayerId id) const { return players_[id].partition; }
  const Partition& mediator() const { return mediator_; }
  const std::vector<Rational>& prior() const { return prior_; }
  const Rational& prior(StateId state) const { return prior_[state]; }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<std::string> states_;
  std::vector<Player> players_;
  Partition mediator_;
  std::vector<Rational> prior_;
};

// Unvalidated instance as it appears in the external format.
struct RawModel {
  std::vector<std::string> states;
  std::vector<std::pair<std::string, Rational>> prior;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> players;
  std::vector<std::vector<std::string>> mediator;
};

// Throws ValidationError listing every violated structural condition.
Model validate_model(const RawModel& raw);

// Joint belief: one Belief per (state, player).
class JointBelief {
 public:
  JointBelief(std::size_t num_states, std::size_t num_players)
      : num_states_(num_states), num_players_(num_players), entries_(num_states * num_players) {}

  std::size_t num_states() const { return num_states_; }
  std::size_t num_players() const { return num_players_; }
  const Belief& at(StateId state, PlayerId player) const {
    return entries_[state * num_players_ + player];
  }
  Belief& at(StateId state, PlayerId player) { return entries_[state * num_players_ + player]; }

  // JB(state, player)(state); zero for the empty marker.
  Rational diagonal(StateId state, PlayerId player) const;

  friend bool operator==(const JointBelief&, const JointBelief&) = default;

 private:
  std::size_t num_states_;
  std::size_t num_players_;
  std::vector<Belief> entries_;
};

// entries[state][player] = nullopt (empty marker) or sparse distribution.
struct RawJointBelief {
  using SparseDistribution = std::vector<std::pair<std::string, Rational>>;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::optional<SparseDistribution>>>>>
      entries;
};

// All violations of the joint-belief conditions; empty when valid. Checks
// normalization, support within the player's cell, per-cell constancy and the
// positivity and cross-player ratio conditions.
std::vector<Violation> joint_belief_violations(const Model& model, const JointBelief& jb);

// Throws ValidationError.
JointBelief validate_joint_belief(const Model& model, const RawJointBelief& raw);
JointBelief validate_joint_belief(const Model& model, JointBelief jb);

// tau(signal | state) over a finite, ordered signal alphabet.
class SignalKernel {
 public:
  SignalKernel(std::vector<std::string> signals, std::vector<std::vector<Rational>> table);

  std::size_t num_signals() const { return signals_.size(); }
  std::size_t num_states() const { return table_.empty() ? 0 : table_.front().size(); }
  const std::vector<std::string>& signals() const { return signals_; }
  const std::string& signal_name(std::size_t signal) const { return signals_[signal]; }
  // Throws Error(UnknownSignal).
  std::size_t signal(const std::string& name) const;
  const Rational& prob(std::size_t signal, StateId state) const { return table_[signal][state]; }
  const std::vector<Rational>& row(std::size_t signal) const { return table_[signal]; }

  friend bool operator==(const SignalKernel&, const SignalKernel&) = default;

 private:
  std::vector<std::string> signals_;
  std::vector<std::vector<Rational>> table_;  // [signal][state]
};

std::vector<Violation> kernel_violations(const Model& model, const SignalKernel& kernel);
// Throws ValidationError.
void validate_kernel(const Model& model, const SignalKernel& kernel);

// Single-signal kernel with tau(s|.) = 1.
SignalKernel uninformative_kernel(const Model& model);

// Pr(signal) = sum over states of prior * tau.
Rational signal_probability(const Model& model, const SignalKernel& kernel, std::size_t signal);

// Posterior of `player` at `state` after observing `signal`; the empty marker
// when the signal has zero likelihood on the player's cell.
Belief bayes_posterior(const Model& model, const SignalKernel& kernel, std::size_t signal,
                       StateId state, PlayerId player);

// Joint posterior for one signal. Throws Error(SignalHasZeroProbability).
JointBelief joint_posterior(const Model& model, const SignalKernel& kernel, std::size_t signal);

}  // namespace mediator
