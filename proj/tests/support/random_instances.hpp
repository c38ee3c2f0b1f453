#pragma once

// Random instance generators and brute-force oracles shared by the unit and
// acceptance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mediator/consistency.hpp"
#include "mediator/generator.hpp"
#include "mediator/infograph.hpp"
#include "mediator/model.hpp"
#include "mediator/potential.hpp"

namespace testing_support {

using namespace mediator;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Rational small_positive(Rng& rng) {
  return Rational(static_cast<long>(uniform(rng, 1, 9)), static_cast<long>(uniform(rng, 1, 4)));
}

inline Partition random_partition(Rng& rng, std::size_t n) {
  std::size_t blocks = uniform(rng, 1, n);
  std::vector<std::vector<StateId>> cells(blocks);
  for (StateId s = 0; s < n; ++s) cells[uniform(rng, 0, blocks - 1)].push_back(s);
  cells.erase(std::remove_if(cells.begin(), cells.end(), [](const auto& c) { return c.empty(); }), cells.end());
  return Partition(n, std::move(cells));
}

// Each cell is kept whole or split into singletons.
inline Partition random_refinement(Rng& rng, const Partition& base) {
  std::vector<std::vector<StateId>> cells;
  for (const auto& cell : base.cells()) {
    if (uniform(rng, 0, 2) != 0) {
      cells.push_back(cell);
    } else {
      for (StateId s : cell) cells.push_back({s});
    }
  }
  return Partition(base.num_states(), std::move(cells));
}

inline Partition coarse_partition(Rng& rng, std::size_t n) {
  std::vector<std::vector<StateId>> cells(2);
  for (StateId s = 0; s < n; ++s) cells[uniform(rng, 0, 1)].push_back(s);
  if (cells[1].empty()) cells.pop_back();
  if (cells[0].empty()) cells.erase(cells.begin());
  return Partition(n, std::move(cells));
}

inline Partition cross_pairs(Rng& rng, const Partition& mediator) {
  std::vector<StateId> left = mediator.cell(0);
  std::vector<StateId> right = mediator.size() > 1 ? mediator.cell(1) : std::vector<StateId>{};
  std::shuffle(left.begin(), left.end(), rng);
  std::shuffle(right.begin(), right.end(), rng);
  std::vector<std::vector<StateId>> cells;
  std::size_t k = 0;
  for (; k < std::min(left.size(), right.size()); ++k) cells.push_back({std::min(left[k], right[k]), std::max(left[k], right[k])});
  for (std::size_t j = k; j < left.size(); ++j) cells.push_back({left[j]});
  for (std::size_t j = k; j < right.size(); ++j) cells.push_back({right[j]});
  std::sort(cells.begin(), cells.end());
  return Partition(mediator.num_states(), std::move(cells));
}

inline std::vector<std::string> names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

inline Model random_model(Rng& rng, std::size_t n_states, std::size_t n_players, bool fine = false) {
  std::vector<Rational> prior;
  Rational total;
  for (std::size_t s = 0; s < n_states; ++s) {
    prior.emplace_back(static_cast<long>(uniform(rng, 1, 6)));
    total += prior.back();
  }
  for (auto& p : prior) p /= total;
  // In fine mode the mediator has at most two cells and every player refines
  // a base partition of cross pairs (one state from each mediator cell), so
  // no component meets a mediator cell twice and only F-loops can fail.
  Partition mediator = fine ? coarse_partition(rng, n_states) : random_partition(rng, n_states);
  Partition base = cross_pairs(rng, mediator);
  std::vector<Player> players;
  for (const auto& id : names("p", n_players)) {
    players.push_back({id, fine ? random_refinement(rng, base) : random_partition(rng, n_states)});
  }
  return Model(names("s", n_states), std::move(players), std::move(mediator), std::move(prior));
}

// Strictly positive, constant on mediator cells.
inline std::vector<Rational> random_measurable(Rng& rng, const Partition& mediator) {
  std::vector<Rational> f(mediator.num_states());
  for (const auto& cell : mediator.cells()) {
    Rational value = small_positive(rng);
    for (StateId s : cell) f[s] = value;
  }
  return f;
}

// Half derived from a measurable f, half with perturbed or independent labels.
inline PLFunction random_phi(Rng& rng, const InfoGraph& graph, const Partition& mediator, bool consistent) {
  auto f = random_measurable(rng, mediator);
  EdgeLabels labels;
  for (const auto& e : graph.edges()) labels[{e.a, e.b}] = f[e.a] / f[e.b];
  if (!consistent && !graph.edges().empty()) {
    if (uniform(rng, 0, 2) == 0) {
      for (auto& [edge, value] : labels) value = small_positive(rng);
    } else {
      auto it = labels.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(uniform(rng, 0, labels.size() - 1)));
      it->second *= uniform(rng, 0, 1) ? Rational(2) : Rational(1, 3);
    }
  }
  return PLFunction::from_labels(graph, labels);
}

// Random F-measurable single-signal kernel; some mediator cells may get zero.
inline SignalKernel random_kernel(Rng& rng, const Model& model, bool allow_zero) {
  const auto& mediator = model.mediator();
  std::vector<Rational> s(model.num_states());
  bool any = false;
  for (const auto& cell : mediator.cells()) {
    Rational v = allow_zero && uniform(rng, 0, 3) == 0 ? Rational(0)
                                                       : Rational(static_cast<long>(uniform(rng, 1, 8)), 8);
    any = any || v.is_positive();
    for (StateId w : cell) s[w] = v;
  }
  if (!any) {
    for (StateId w : mediator.cell(0)) s[w] = Rational(1, 2);
  }
  std::vector<Rational> rest;
  for (const auto& v : s) rest.push_back(Rational(1) - v);
  return SignalKernel({"s", "s0"}, {s, rest});
}

// ---- LP oracle: enumerate basic solutions of A q = mu, q >= 0 ----

// Solves the square-or-tall system A_S x = b exactly; nullopt when the columns
// are dependent or the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_columns(const std::vector<Distribution>& members,
                                                          const std::vector<std::size_t>& cols,
                                                          const Distribution& b) {
  const std::size_t m = b.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = members[cols[c]][r];
    aug[r][k] = b[r];
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = row;
    while (pivot < m && aug[pivot][c].is_zero()) ++pivot;
    if (pivot == m) return std::nullopt;  // dependent columns
    std::swap(aug[pivot], aug[row]);
    Rational inv = aug[row][c].reciprocal();
    for (auto& v : aug[row]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || aug[r][c].is_zero()) continue;
      Rational factor = aug[r][c];
      for (std::size_t j = 0; j <= k; ++j) aug[r][j] -= factor * aug[row][j];
    }
    ++row;
  }
  for (std::size_t r = row; r < m; ++r) {
    if (!aug[r][k].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(k);
  for (std::size_t c = 0; c < k; ++c) x[c] = aug[c][k];
  return x;
}

struct VertexOracle {
  bool pp = false;
  bool spp = false;
};

inline VertexOracle vertex_oracle(const PosteriorFamily& family) {
  const std::size_t n = family.members.size();
  std::vector<bool> covered(n, false);
  VertexOracle out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) cols.push_back(j);
    }
    auto x = solve_columns(family.members, cols, family.prior);
    if (!x) continue;
    if (std::any_of(x->begin(), x->end(), [](const Rational& v) { return v.sign() < 0; })) continue;
    out.pp = true;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (x->at(c).is_positive()) covered[cols[c]] = true;
    }
  }
  out.spp = out.pp && std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  return out;
}

inline Distribution random_distribution(Rng& rng, std::size_t n, bool allow_zero) {
  Distribution d(n);
  Rational total;
  for (auto& v : d) {
    v = Rational(static_cast<long>(uniform(rng, allow_zero ? 0 : 1, 4)));
    total += v;
  }
  if (total.is_zero()) {
    d[uniform(rng, 0, n - 1)] = Rational(1);
    total = Rational(1);
  }
  for (auto& v : d) v /= total;
  return d;
}

// About half the families have the prior inside their convex hull.
inline PosteriorFamily random_family(Rng& rng, std::size_t n_states, std::size_t n_members) {
  PosteriorFamily family;
  for (std::size_t k = 0; k < n_members; ++k) family.members.push_back(random_distribution(rng, n_states, true));
  if (uniform(rng, 0, 1) == 0) {
    family.prior = random_distribution(rng, n_states, false);
    return family;
  }
  Distribution mix(n_states);
  Rational total;
  std::vector<Rational> q;
  for (std::size_t k = 0; k < n_members; ++k) {
    q.emplace_back(static_cast<long>(uniform(rng, 0, 3)));
    total += q.back();
  }
  if (total.is_zero()) {
    q[0] = Rational(1);
    total = Rational(1);
  }
  for (std::size_t k = 0; k < n_members; ++k) {
    for (std::size_t s = 0; s < n_states; ++s) mix[s] += q[k] / total * family.members[k][s];
  }
  if (std::any_of(mix.begin(), mix.end(), [](const Rational& v) { return v.is_zero(); })) {
    // The prior must be strictly positive; blend with the uniform distribution.
    for (auto& v : mix) v = (v + Rational(1, static_cast<long>(n_states))) / Rational(2);
  }
  family.prior = mix;
  return family;
}

// ---- games ----

inline StrategicGame game_from(const std::vector<std::size_t>& sizes,
                               const std::function<Rational(const Profile&, std::size_t)>& payoff) {
  std::vector<std::string> players = names("p", sizes.size());
  std::vector<std::vector<std::string>> actions;
  std::size_t profiles = 1;
  for (std::size_t n : sizes) {
    actions.push_back(names("a", n));
    profiles *= n;
  }
  StrategicGame shape(players, actions, std::vector<std::vector<Rational>>(profiles, std::vector<Rational>(sizes.size())));
  std::vector<std::vector<Rational>> table(profiles);
  for (std::size_t k = 0; k < profiles; ++k) {
    Profile p = shape.profile(k);
    for (std::size_t i = 0; i < sizes.size(); ++i) table[k].push_back(payoff(p, i));
  }
  return StrategicGame(players, actions, table);
}

inline std::vector<std::size_t> random_sizes(Rng& rng) {
  std::vector<std::size_t> sizes(uniform(rng, 1, 3));
  for (auto& s : sizes) s = uniform(rng, 1, 3);
  return sizes;
}

inline StrategicGame random_game(Rng& rng) {
  auto sizes = random_sizes(rng);
  return game_from(sizes, [&](const Profile&, std::size_t) { return Rational(static_cast<long>(uniform(rng, 0, 6)) - 3); });
}

// u_i = g(a) + h_i(a_-i): always an exact potential game.
inline StrategicGame random_potential_game(Rng& rng, bool perturb) {
  auto sizes = random_sizes(rng);
  std::size_t profiles = 1;
  for (auto s : sizes) profiles *= s;
  std::vector<Rational> g(profiles);
  for (auto& v : g) v = Rational(static_cast<long>(uniform(rng, 0, 8)) - 4, static_cast<long>(uniform(rng, 1, 2)));
  std::vector<std::vector<Rational>> h(sizes.size(), std::vector<Rational>(profiles));
  for (auto& row : h) {
    for (auto& v : row) v = Rational(static_cast<long>(uniform(rng, 0, 4)));
  }
  auto others = [&](const Profile& p, std::size_t i) {
    std::size_t key = 0;
    for (std::size_t j = 0; j < p.size(); ++j) key = key * sizes[j] + (j == i ? 0 : p[j]);
    return key;
  };
  auto index = [&](const Profile& p) {
    std::size_t key = 0;
    for (std::size_t j = 0; j < p.size(); ++j) key = key * sizes[j] + p[j];
    return key;
  };
  std::size_t bump_profile = uniform(rng, 0, profiles - 1);
  std::size_t bump_player = uniform(rng, 0, sizes.size() - 1);
  return game_from(sizes, [&](const Profile& p, std::size_t i) {
    Rational u = g[index(p)] + h[i][others(p, i)];
    if (perturb && index(p) == bump_profile && i == bump_player) u += Rational(1);
    return u;
  });
}

inline StrategicGame random_identical_interest(Rng& rng) {
  auto sizes = random_sizes(rng);
  std::size_t profiles = 1;
  for (auto s : sizes) profiles *= s;
  std::vector<Rational> g(profiles);
  for (auto& v : g) v = Rational(static_cast<long>(uniform(rng, 0, 10)) - 5);
  return game_from(sizes, [&](const Profile& p, std::size_t) {
    std::size_t key = 0;
    for (std::size_t j = 0; j < p.size(); ++j) key = key * sizes[j] + p[j];
    return g[key];
  });
}

// Each player picks one of R resources; payoff is minus the resource's cost
// at its load.
inline StrategicGame random_congestion(Rng& rng) {
  std::size_t players = uniform(rng, 2, 3);
  std::size_t resources = uniform(rng, 2, 3);
  std::vector<std::vector<Rational>> cost(resources, std::vector<Rational>(players + 1));
  for (auto& row : cost) {
    for (auto& v : row) v = Rational(static_cast<long>(uniform(rng, 0, 9)));
  }
  std::vector<std::size_t> sizes(players, resources);
  return game_from(sizes, [&](const Profile& p, std::size_t i) {
    std::size_t load = static_cast<std::size_t>(std::count(p.begin(), p.end(), p[i]));
    return -cost[p[i]][load];
  });
}

// Four-cycle condition: for every profile and every pair of players i != j
// with alternative actions, the deviators' gains around the square sum to 0.
inline bool four_cycle_oracle(const StrategicGame& game) {
  const std::size_t n = game.num_players();
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    Profile base = game.profile(a);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t x = 0; x < game.actions(i).size(); ++x) {
          for (std::size_t y = 0; y < game.actions(j).size(); ++y) {
            if (x == base[i] || y == base[j]) continue;
            Profile pi = base, pij = base, pj = base;
            pi[i] = x;
            pij[i] = x;
            pij[j] = y;
            pj[j] = y;
            std::size_t A = a, B = game.index(pi), C = game.index(pij), D = game.index(pj);
            Rational sum = (game.payoff(B, i) - game.payoff(A, i)) + (game.payoff(C, j) - game.payoff(B, j)) +
                           (game.payoff(D, i) - game.payoff(C, i)) + (game.payoff(A, j) - game.payoff(D, j));
            if (!sum.is_zero()) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace testing_support
