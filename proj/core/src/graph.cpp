#include "chromadist/graph.hpp"

#include <algorithm>
#include <string>

#include "chromadist/error.hpp"

namespace chromadist {

namespace {

std::string pair_text(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
  if (edges.empty()) {
    throw Error(ErrorCode::EmptyGraph, "edge list is empty");
  }
  adjacency_.resize(n);
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::InvalidVertex,
                  "edge " + pair_text(u, v) + " references a vertex outside 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    adjacency_[u].push_back({v, id});
    adjacency_[v].push_back({u, id});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbour < b.neighbour; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].neighbour == list[i - 1].neighbour) {
        const auto& e = edges_[list[i].edge];
        throw Error(ErrorCode::DuplicateEdge, "edge " + pair_text(e.u, e.v) + " appears twice");
      }
    }
  }
  min_degree_ = adjacency_.empty() ? 0 : adjacency_.front().size();
  for (const auto& list : adjacency_) {
    max_degree_ = std::max(max_degree_, list.size());
    min_degree_ = std::min(min_degree_, list.size());
  }
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Incidence& a, VertexId x) { return a.neighbour < x; });
  if (it != list.end() && it->neighbour == v) return it->edge;
  return kNoEdge;
}

std::vector<EdgeId> Graph::isolated_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (degree(edges_[e].u) == 1 && degree(edges_[e].v) == 1) out.push_back(e);
  }
  return out;
}

Graph build_graph(std::span<const std::pair<VertexId, VertexId>> edges) {
  std::size_t n = 0;
  for (const auto& [u, v] : edges) n = std::max<std::size_t>(n, std::max(u, v) + 1ULL);
  return Graph(n, edges);
}

}  // namespace chromadist
