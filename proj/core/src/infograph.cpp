#include "mediator/infograph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "disjoint_sets.hpp"

namespace mediator {

InfoGraph::InfoGraph(std::size_t num_states, std::vector<StateId> vertices,
                     std::vector<InfoEdge> edges)
    : vertices_(std::move(vertices)),
      member_(num_states, false),
      edges_(std::move(edges)),
      adjacency_(num_states),
      adjacency_edge_(num_states) {
  std::sort(vertices_.begin(), vertices_.end());
  for (StateId v : vertices_) member_[v] = true;
  std::sort(edges_.begin(), edges_.end(), [](const InfoEdge& x, const InfoEdge& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  std::vector<std::vector<std::pair<StateId, std::size_t>>> adj(num_states);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adj[edges_[e].a].emplace_back(edges_[e].b, e);
    adj[edges_[e].b].emplace_back(edges_[e].a, e);
  }
  for (StateId v = 0; v < num_states; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    for (auto [w, e] : adj[v]) {
      adjacency_[v].push_back(w);
      adjacency_edge_[v].push_back(e);
    }
  }
}

std::optional<std::size_t> InfoGraph::find_edge(StateId a, StateId b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return std::nullopt;
  const auto& nbrs = adjacency_[a];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return adjacency_edge_[a][static_cast<std::size_t>(it - nbrs.begin())];
}

InfoGraph build_graph(const Model& model) {
  std::map<std::pair<StateId, StateId>, std::vector<PlayerId>> annotated;
  for (PlayerId i = 0; i < model.num_players(); ++i) {
    for (const auto& cell : model.partition(i).cells()) {
      for (std::size_t x = 0; x < cell.size(); ++x) {
        for (std::size_t y = x + 1; y < cell.size(); ++y) {
          annotated[{cell[x], cell[y]}].push_back(i);
        }
      }
    }
  }
  std::vector<InfoEdge> edges;
  edges.reserve(annotated.size());
  for (auto& [key, players] : annotated) edges.push_back({key.first, key.second, std::move(players)});
  std::vector<StateId> vertices(model.num_states());
  std::iota(vertices.begin(), vertices.end(), StateId{0});
  return InfoGraph(model.num_states(), std::move(vertices), std::move(edges));
}

CKCPartition ckcs(const InfoGraph& graph) {
  detail::DisjointSets sets(graph.num_states());
  for (const auto& e : graph.edges()) sets.unite(e.a, e.b);

  CKCPartition out;
  out.component_of.assign(graph.num_states(), CKCPartition::npos);
  std::map<std::size_t, std::size_t> root_to_component;
  // Vertices ascend, so components are numbered by smallest member.
  for (StateId v : graph.vertices()) {
    auto [it, inserted] = root_to_component.try_emplace(sets.find(v), out.components.size());
    if (inserted) out.components.emplace_back();
    out.components[it->second].push_back(v);
    out.component_of[v] = it->second;
  }
  return out;
}

ComponentGraph component_graph(const InfoGraph& graph, const CKCPartition& components,
                               const Partition& mediator) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> witnesses;
  for (std::size_t c = 0; c < mediator.size(); ++c) {
    std::vector<std::size_t> touched;
    for (StateId s : mediator.cell(c)) {
      if (graph.contains(s)) touched.push_back(components.component_of[s]);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t x = 0; x < touched.size(); ++x) {
      for (std::size_t y = x + 1; y < touched.size(); ++y) {
        witnesses[{touched[x], touched[y]}].push_back(c);
      }
    }
  }
  ComponentGraph out;
  out.num_components = components.size();
  for (auto& [key, cells] : witnesses) out.edges.push_back({key.first, key.second, std::move(cells)});
  return out;
}

Model restrict_players(const Model& model, std::span<const PlayerId> group) {
  if (group.empty()) throw Error(ErrorKind::EmptySubgroup, "player subgroup is empty");
  std::vector<PlayerId> ids(group.begin(), group.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Player> players;
  for (PlayerId p : ids) {
    if (p >= model.num_players()) {
      throw Error(ErrorKind::UnknownPlayer, "player index " + std::to_string(p) + " out of range");
    }
    players.push_back(model.player(p));
  }
  return Model(model.states(), std::move(players), model.mediator(), model.prior());
}

InfoGraph restrict_states(const InfoGraph& graph, std::span<const StateId> states) {
  std::vector<bool> keep(graph.num_states(), false);
  std::vector<StateId> vertices;
  for (StateId s : states) {
    if (graph.contains(s) && !keep[s]) {
      keep[s] = true;
      vertices.push_back(s);
    }
  }
  std::vector<InfoEdge> edges;
  for (const auto& e : graph.edges()) {
    if (keep[e.a] && keep[e.b]) edges.push_back(e);
  }
  return InfoGraph(graph.num_states(), std::move(vertices), std::move(edges));
}

}  // namespace mediator
