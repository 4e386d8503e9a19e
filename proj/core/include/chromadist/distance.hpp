#pragma once

#include <cstdint>
#include <vector>

#include "chromadist/graph.hpp"

namespace chromadist {

/// BFS distances from `source`, truncated at `max_depth`. Vertices farther
/// than `max_depth` (or unreachable) get kUnreachable.
std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source,
                                         std::uint32_t max_depth = kUnreachable);

/// Shortest-path distance, kUnreachable when u and v lie in different components.
std::uint32_t distance(const Graph& g, VertexId u, VertexId v);

/// Vertices at distance 1..r from v, ascending. v itself is excluded.
std::vector<VertexId> r_neighbours(const Graph& g, VertexId v, std::uint32_t r);

/// Largest finite distance over all pairs; kUnreachable when g is disconnected.
std::uint32_t diameter(const Graph& g);

bool is_connected(const Graph& g);

struct RAdjacentPair {
  VertexId u;  // u < v
  VertexId v;
  std::uint32_t dist;

  friend bool operator==(const RAdjacentPair&, const RAdjacentPair&) = default;
};

/// All pairs u < v with 1 <= d(u,v) <= r, sorted by (u, v). With
/// `same_degree_only` only pairs with d(u) = d(v) are kept.
std::vector<RAdjacentPair> r_adjacent_pairs(const Graph& g, std::uint32_t r,
                                            bool same_degree_only = false);

}  // namespace chromadist
