#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "chromadist/types.hpp"

namespace chromadist {

struct Incidence {
  VertexId neighbour;
  EdgeId edge;
};

struct EdgeEnds {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edge ids follow input order and are the handle used by every colouring.
/// Adjacency lists are sorted by neighbour id.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on exactly `n` vertices. Throws Error with SelfLoop,
  /// DuplicateEdge, EmptyGraph (no edges) or InvalidVertex.
  Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const EdgeEnds& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<EdgeEnds>& edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t min_degree() const noexcept { return min_degree_; }

  /// Edge id joining u and v, or kNoEdge.
  EdgeId find_edge(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v) != kNoEdge; }

  /// Edges uv with d(u) = d(v) = 1, i.e. K2 components.
  std::vector<EdgeId> isolated_edges() const;

  static constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

 private:
  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::size_t max_degree_ = 0;
  std::size_t min_degree_ = 0;
};

/// Builds a graph whose order is one more than the largest vertex id used.
Graph build_graph(std::span<const std::pair<VertexId, VertexId>> edges);

}  // namespace chromadist
