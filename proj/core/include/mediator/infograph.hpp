#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "mediator/model.hpp"

namespace mediator {

// Undirected edge {a, b} with a < b, annotated with every player whose
// partition puts both states in one cell.
struct InfoEdge {
  StateId a;
  StateId b;
  std::vector<PlayerId> players;

  friend bool operator==(const InfoEdge&, const InfoEdge&) = default;
};

// Graph of information over a subset of the model's states. Self-edges are
// never stored.
class InfoGraph {
 public:
  InfoGraph() = default;
  InfoGraph(std::size_t num_states, std::vector<StateId> vertices, std::vector<InfoEdge> edges);

  std::size_t num_states() const { return member_.size(); }
  const std::vector<StateId>& vertices() const { return vertices_; }
  bool contains(StateId state) const { return state < member_.size() && member_[state]; }
  const std::vector<InfoEdge>& edges() const { return edges_; }
  // Neighbours in ascending order.
  const std::vector<StateId>& neighbors(StateId state) const { return adjacency_[state]; }
  std::optional<std::size_t> find_edge(StateId a, StateId b) const;
  bool has_edge(StateId a, StateId b) const { return find_edge(a, b).has_value(); }

  friend bool operator==(const InfoGraph& lhs, const InfoGraph& rhs) {
    return lhs.vertices_ == rhs.vertices_ && lhs.edges_ == rhs.edges_;
  }

 private:
  std::vector<StateId> vertices_;
  std::vector<bool> member_;
  std::vector<InfoEdge> edges_;
  std::vector<std::vector<StateId>> adjacency_;
  std::vector<std::vector<std::size_t>> adjacency_edge_;
};

// Common-knowledge components: connected components of an InfoGraph,
// numbered by smallest member state.
struct CKCPartition {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<StateId>> components;
  std::vector<std::size_t> component_of;  // npos for states outside the graph

  std::size_t size() const { return components.size(); }
};

// Edge between two CKCs (from < to) with every mediator cell index that
// touches both.
struct ComponentEdge {
  std::size_t from;
  std::size_t to;
  std::vector<std::size_t> witnesses;
};

struct ComponentGraph {
  std::size_t num_components = 0;
  std::vector<ComponentEdge> edges;
};

InfoGraph build_graph(const Model& model);
CKCPartition ckcs(const InfoGraph& graph);
ComponentGraph component_graph(const InfoGraph& graph, const CKCPartition& components,
                               const Partition& mediator);

// Keeps only the partitions of `group`. Throws Error(EmptySubgroup) when the
// group is empty, Error(UnknownPlayer) on an out-of-range id.
Model restrict_players(const Model& model, std::span<const PlayerId> group);

// Induced subgraph on `states` (intersected with the graph's vertices).
InfoGraph restrict_states(const InfoGraph& graph, std::span<const StateId> states);

}  // namespace mediator
