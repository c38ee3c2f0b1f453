#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mediator/errors.hpp"
#include "mediator/rational.hpp"

namespace mediator {

using Profile = std::vector<std::size_t>;  // one action index per player

// Finite strategic game. Profiles are numbered in mixed radix with the first
// player most significant, so index order is lexicographic profile order.
class StrategicGame {
 public:
  // payoffs[profile index][player]. Throws Error(InvalidGame).
  StrategicGame(std::vector<std::string> players, std::vector<std::vector<std::string>> actions,
                std::vector<std::vector<Rational>> payoffs);

  std::size_t num_players() const { return players_.size(); }
  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::string>& actions(std::size_t player) const { return actions_[player]; }
  std::size_t num_profiles() const { return payoffs_.size(); }
  Profile profile(std::size_t index) const;
  std::size_t index(const Profile& profile) const;
  // Actions joined by ',' in player order, e.g. "C,D".
  std::string profile_key(std::size_t index) const;
  const Rational& payoff(std::size_t profile, std::size_t player) const { return payoffs_[profile][player]; }

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<std::vector<Rational>> payoffs_;
};

using DirectedPair = std::pair<std::size_t, std::size_t>;

// Directed graph given by its (undirected) edge list plus additive labels on
// directed edges; missing directions are filled by antisymmetry.
struct AdditiveGraph {
  std::size_t num_vertices = 0;
  std::vector<DirectedPair> edges;  // a < b
  std::map<DirectedPair, Rational> rho;
};

struct DeviationEdge {
  std::size_t from;  // from < to
  std::size_t to;
  std::size_t player;
};

struct DeviationGraph {
  std::vector<DeviationEdge> edges;
  AdditiveGraph graph;  // rho(a, a') = u_i(a) - u_i(a')
};

DeviationGraph build_deviation_graph(const StrategicGame& game);

// Closed vertex sequence v1 ... vn v1 whose labels do not sum to zero.
struct AdditiveCycle {
  std::vector<std::size_t> vertices;
  Rational sum;
};

// Heights g with g(a) - g(b) = rho(a, b) on every edge, g = 0 at the smallest
// vertex of each connected component; or a violating basic cycle. Throws
// Error(AntisymmetryViolation).
std::variant<std::vector<Rational>, AdditiveCycle> check_inc_add(const AdditiveGraph& graph);

// Sum of rho along a closed vertex sequence. Throws Error(InvalidLabel) on a
// non-edge.
Rational cycle_sum(const AdditiveGraph& graph, const std::vector<std::size_t>& cycle);

std::variant<std::vector<Rational>, AdditiveCycle> recover_potential(const StrategicGame& game);

struct FailingEdge {
  std::size_t profile;
  std::size_t player;
  std::size_t deviation;  // profile reached by the unilateral deviation
};

std::optional<FailingEdge> verify_potential(const StrategicGame& game, const std::vector<Rational>& g);

}  // namespace mediator
