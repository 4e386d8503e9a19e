#include "chromadist/distance.hpp"

#include <algorithm>

namespace chromadist {

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source, std::uint32_t max_depth) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> frontier{source};
  std::vector<VertexId> next;
  dist[source] = 0;
  for (std::uint32_t depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    next.clear();
    for (VertexId x : frontier) {
      for (const auto& inc : g.incident(x)) {
        if (dist[inc.neighbour] == kUnreachable) {
          dist[inc.neighbour] = depth + 1;
          next.push_back(inc.neighbour);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::uint32_t distance(const Graph& g, VertexId u, VertexId v) {
  if (u == v) return 0;
  return bfs_distances(g, u)[v];
}

std::vector<VertexId> r_neighbours(const Graph& g, VertexId v, std::uint32_t r) {
  const auto dist = bfs_distances(g, v, r);
  std::vector<VertexId> out;
  for (VertexId x = 0; x < dist.size(); ++x) {
    if (x != v && dist[x] != kUnreachable) out.push_back(x);
  }
  return out;
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t d : bfs_distances(g, v)) {
      if (d == kUnreachable) return kUnreachable;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) { return d == kUnreachable; });
}

std::vector<RAdjacentPair> r_adjacent_pairs(const Graph& g, std::uint32_t r, bool same_degree_only) {
  std::vector<RAdjacentPair> out;
  if (r == 0) return out;
  // Reused BFS buffers; `seen` is stamped with the source to avoid clearing.
  std::vector<VertexId> stamp(g.vertex_count(), static_cast<VertexId>(-1));
  std::vector<VertexId> frontier;
  std::vector<VertexId> next;
  std::vector<RAdjacentPair> local;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    local.clear();
    frontier.assign(1, s);
    stamp[s] = s;
    for (std::uint32_t depth = 1; depth <= r && !frontier.empty(); ++depth) {
      next.clear();
      for (VertexId x : frontier) {
        for (const auto& inc : g.incident(x)) {
          const VertexId y = inc.neighbour;
          if (stamp[y] == s) continue;
          stamp[y] = s;
          next.push_back(y);
          if (y > s && (!same_degree_only || g.degree(y) == g.degree(s))) {
            local.push_back({s, y, depth});
          }
        }
      }
      frontier.swap(next);
    }
    std::sort(local.begin(), local.end(),
              [](const RAdjacentPair& a, const RAdjacentPair& b) { return a.v < b.v; });
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

}  // namespace chromadist
