#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

#include "mediator/infograph.hpp"

namespace mediator::detail {

// Shortest path from `from` to `to` (inclusive). Empty when unreachable.
inline std::vector<StateId> bfs_path(const InfoGraph& graph, StateId from, StateId to) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> prev(graph.num_states(), none);
  prev[from] = from;
  std::deque<StateId> queue{from};
  while (!queue.empty() && prev[to] == none) {
    StateId v = queue.front();
    queue.pop_front();
    for (StateId w : graph.neighbors(v)) {
      if (prev[w] != none) continue;
      prev[w] = v;
      queue.push_back(w);
    }
  }
  if (prev[to] == none) return {};
  std::vector<StateId> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace mediator::detail
