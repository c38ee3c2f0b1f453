// Exhaustive enumeration of F-cycles and F-loops. Deliberately shares nothing
// with the spanning-tree / union-find decision procedure beyond PLFunction
// lookups, so the two can be compared.
#include <functional>
#include <optional>

#include "certificate_util.hpp"
#include "mediator/consistency.hpp"

namespace mediator {

namespace {

std::vector<std::size_t> connectivity_classes(const InfoGraph& graph) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(graph.num_states(), none);
  std::size_t next = 0;
  for (StateId s : graph.vertices()) {
    if (label[s] != none) continue;
    std::vector<StateId> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      StateId v = stack.back();
      stack.pop_back();
      for (StateId w : graph.neighbors(v)) {
        if (label[w] == none) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::optional<Certificate> find_cycle(const InfoGraph& graph, const Partition& mediator,
                                      const PLFunction& phi, std::size_t max_len) {
  const std::size_t n = graph.num_states();
  std::vector<bool> on_path(n, false);
  std::vector<StateId> path;
  std::optional<Certificate> found;

  std::function<void(const Rational&)> extend = [&](const Rational& product) {
    if (found) return;
    const StateId start = path.front();
    const StateId end = path.back();
    const std::size_t edges = path.size() - 1;
    if (edges >= 1 && mediator.same_cell(start, end) && product != Rational(1)) {
      found = Certificate{CertificateKind::FCycle, path, {}, product};
      return;
    }
    if (edges >= 2 && edges + 1 <= max_len && graph.has_edge(end, start)) {
      Rational closed = product * phi(end, start);
      if (closed != Rational(1)) {
        auto cycle = path;
        cycle.push_back(start);
        found = Certificate{CertificateKind::FCycle, std::move(cycle), {}, closed};
        return;
      }
    }
    if (edges >= max_len) return;
    for (StateId w : graph.neighbors(end)) {
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(product * phi(end, w));
      path.pop_back();
      on_path[w] = false;
      if (found) return;
    }
  };

  for (StateId s : graph.vertices()) {
    on_path[s] = true;
    path = {s};
    extend(Rational(1));
    on_path[s] = false;
    if (found) return canonicalize(std::move(*found));
  }
  return std::nullopt;
}

std::optional<Certificate> find_loop(const InfoGraph& graph, const Partition& mediator,
                                     const PLFunction& phi, std::size_t max_len) {
  const auto comp = connectivity_classes(graph);
  std::size_t num_comps = 0;
  for (StateId s : graph.vertices()) num_comps = std::max(num_comps, comp[s] + 1);
  std::vector<std::vector<StateId>> members(num_comps);
  for (StateId s : graph.vertices()) members[comp[s]].push_back(s);

  // Product of phi along any within-component path; independent of the
  // path once internal consistency holds.
  auto within = [&](StateId a, StateId b) {
    Rational product(1);
    auto path = detail::bfs_path(graph, a, b);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) product *= phi(path[k], path[k + 1]);
    return product;
  };

  std::vector<bool> used(num_comps, false);
  std::vector<LoopPair> pairs;
  std::optional<Certificate> found;

  std::function<void(const Rational&)> extend = [&](const Rational& product) {
    if (found) return;
    const StateId first = pairs.front().from;
    const StateId last = pairs.back().to;
    if (pairs.size() >= 2 && mediator.same_cell(last, first) && product != Rational(1)) {
      found = Certificate{CertificateKind::FLoop, {}, pairs, product};
      return;
    }
    if (pairs.size() >= max_len) return;
    for (StateId next : mediator.cell_containing(last)) {
      if (!graph.contains(next) || used[comp[next]]) continue;
      // Rotations are equivalent: keep the first component the smallest.
      if (comp[next] < comp[first]) continue;
      used[comp[next]] = true;
      for (StateId exit : members[comp[next]]) {
        pairs.push_back({next, exit});
        extend(product * within(next, exit));
        pairs.pop_back();
        if (found) break;
      }
      used[comp[next]] = false;
      if (found) return;
    }
  };

  for (StateId s : graph.vertices()) {
    used[comp[s]] = true;
    for (StateId exit : members[comp[s]]) {
      pairs = {{s, exit}};
      extend(within(s, exit));
      if (found) return canonicalize(std::move(*found));
    }
    used[comp[s]] = false;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Certificate> brute_force_check(const InfoGraph& graph, const Partition& mediator,
                                             const PLFunction& phi, std::size_t max_len) {
  if (auto cycle = find_cycle(graph, mediator, phi, max_len)) return cycle;
  return find_loop(graph, mediator, phi, max_len);
}

}  // namespace mediator
