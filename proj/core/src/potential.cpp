#include "mediator/potential.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace mediator {

StrategicGame::StrategicGame(std::vector<std::string> players,
                             std::vector<std::vector<std::string>> actions,
                             std::vector<std::vector<Rational>> payoffs)
    : players_(std::move(players)), actions_(std::move(actions)), payoffs_(std::move(payoffs)) {
  if (players_.empty()) throw Error(ErrorKind::InvalidGame, "game has no players");
  if (actions_.size() != players_.size()) throw Error(ErrorKind::InvalidGame, "one action list per player");
  std::size_t profiles = 1;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (actions_[i].empty()) throw Error(ErrorKind::InvalidGame, "player " + players_[i] + " has no actions");
    profiles *= actions_[i].size();
  }
  if (payoffs_.size() != profiles) throw Error(ErrorKind::InvalidGame, "payoff table does not cover every profile");
  for (const auto& row : payoffs_) {
    if (row.size() != players_.size()) throw Error(ErrorKind::InvalidGame, "payoff row has wrong length");
  }
}

Profile StrategicGame::profile(std::size_t index) const {
  Profile out(players_.size());
  for (std::size_t i = players_.size(); i-- > 0;) {
    out[i] = index % actions_[i].size();
    index /= actions_[i].size();
  }
  return out;
}

std::size_t StrategicGame::index(const Profile& profile) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < players_.size(); ++i) index = index * actions_[i].size() + profile[i];
  return index;
}

std::string StrategicGame::profile_key(std::size_t index) const {
  Profile p = profile(index);
  std::string key;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) key += ',';
    key += actions_[i][p[i]];
  }
  return key;
}

DeviationGraph build_deviation_graph(const StrategicGame& game) {
  DeviationGraph out;
  out.graph.num_vertices = game.num_profiles();
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    Profile p = game.profile(a);
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      for (std::size_t alt = p[i] + 1; alt < game.actions(i).size(); ++alt) {
        Profile q = p;
        q[i] = alt;
        std::size_t b = game.index(q);
        out.edges.push_back({a, b, i});
        out.graph.edges.emplace_back(a, b);
        Rational diff = game.payoff(a, i) - game.payoff(b, i);
        out.graph.rho[{a, b}] = diff;
        out.graph.rho[{b, a}] = -diff;
      }
    }
  }
  return out;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Rotation/reversal with the smallest vertex sequence; reversal negates the sum.
AdditiveCycle canonical(AdditiveCycle cycle) {
  std::vector<std::size_t> core(cycle.vertices.begin(), cycle.vertices.end() - 1);
  std::vector<std::size_t> reversed(core.rbegin(), core.rend());
  std::vector<std::size_t> best = core;
  bool flipped = false;
  for (int dir = 0; dir < 2; ++dir) {
    const auto& base = dir == 0 ? core : reversed;
    for (std::size_t r = 0; r < base.size(); ++r) {
      std::vector<std::size_t> candidate(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      candidate.insert(candidate.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
      if (candidate < best) {
        best = std::move(candidate);
        flipped = dir == 1;
      }
    }
  }
  best.push_back(best.front());
  cycle.vertices = std::move(best);
  if (flipped) cycle.sum = -cycle.sum;
  return cycle;
}

}  // namespace

Rational cycle_sum(const AdditiveGraph& graph, const std::vector<std::size_t>& cycle) {
  Rational sum;
  for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
    auto it = graph.rho.find({cycle[k], cycle[k + 1]});
    if (it == graph.rho.end()) {
      auto back = graph.rho.find({cycle[k + 1], cycle[k]});
      if (back == graph.rho.end()) {
        throw Error(ErrorKind::InvalidLabel, "cycle uses a non-edge");
      }
      sum -= back->second;
    } else {
      sum += it->second;
    }
  }
  return sum;
}

std::variant<std::vector<Rational>, AdditiveCycle> check_inc_add(const AdditiveGraph& graph) {
  const std::size_t n = graph.num_vertices;
  std::vector<std::vector<std::size_t>> adjacency(n);
  std::map<DirectedPair, Rational> rho;
  for (auto [a, b] : graph.edges) {
    auto forward = graph.rho.find({a, b});
    auto backward = graph.rho.find({b, a});
    if (forward == graph.rho.end() && backward == graph.rho.end()) {
      throw Error(ErrorKind::InvalidLabel, "edge without a label");
    }
    if (forward != graph.rho.end() && backward != graph.rho.end() &&
        forward->second != -backward->second) {
      throw Error(ErrorKind::AntisymmetryViolation,
                  "rho(" + std::to_string(a) + "," + std::to_string(b) + ") + rho(" + std::to_string(b) +
                      "," + std::to_string(a) + ") = " + (forward->second + backward->second).str());
    }
    Rational value = forward != graph.rho.end() ? forward->second : -backward->second;
    rho[{a, b}] = value;
    rho[{b, a}] = -value;
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  for (auto& nbrs : adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }

  std::vector<Rational> height(n);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adjacency[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        height[w] = height[v] - rho[{v, w}];
        queue.push_back(w);
      }
    }
  }

  for (const auto& [edge, value] : rho) {
    auto [a, b] = edge;
    if (a > b || parent[a] == b || parent[b] == a) continue;
    if (height[a] - height[b] == value) continue;
    // a -> b, then the tree path back from b to a.
    std::vector<std::size_t> up;
    std::vector<std::size_t> down;
    std::size_t x = b;
    std::size_t y = a;
    while (depth[x] > depth[y]) up.push_back(x), x = parent[x];
    while (depth[y] > depth[x]) down.push_back(y), y = parent[y];
    while (x != y) {
      up.push_back(x);
      down.push_back(y);
      x = parent[x];
      y = parent[y];
    }
    up.push_back(x);
    up.insert(up.end(), down.rbegin(), down.rend());
    std::vector<std::size_t> cycle{a};
    cycle.insert(cycle.end(), up.begin(), up.end());
    AdditiveGraph normalised{n, graph.edges, rho};
    Rational sum = cycle_sum(normalised, cycle);
    return canonical(AdditiveCycle{std::move(cycle), std::move(sum)});
  }
  return height;
}

std::optional<FailingEdge> verify_potential(const StrategicGame& game, const std::vector<Rational>& g) {
  for (const auto& e : build_deviation_graph(game).edges) {
    if (g[e.from] - g[e.to] != game.payoff(e.from, e.player) - game.payoff(e.to, e.player)) {
      return FailingEdge{e.from, e.player, e.to};
    }
  }
  return std::nullopt;
}

std::variant<std::vector<Rational>, AdditiveCycle> recover_potential(const StrategicGame& game) {
  auto result = check_inc_add(build_deviation_graph(game).graph);
  if (auto* g = std::get_if<std::vector<Rational>>(&result)) {
    if (verify_potential(game, *g)) throw std::logic_error("recover_potential: heights fail the identity");
  }
  return result;
}

}  // namespace mediator
