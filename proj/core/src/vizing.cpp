#include "chromadist/vizing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "chromadist/error.hpp"

namespace chromadist {

ColourBlock::ColourBlock(std::vector<Colour> colours) : colours_(std::move(colours)) {
  std::vector<Colour> sorted = colours_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() == kNoColour) {
    throw Error(ErrorCode::InvalidArgument, "colour block contains colour 0");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "colour block repeats a colour");
  }
}

ColourBlock ColourBlock::range(Colour first, std::size_t size) {
  std::vector<Colour> colours(size);
  std::iota(colours.begin(), colours.end(), first);
  return ColourBlock(std::move(colours));
}

std::size_t subset_max_degree(const Graph& g, std::span<const EdgeId> edge_subset) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  std::size_t best = 0;
  for (EdgeId e : edge_subset) {
    best = std::max({best, ++deg[g.edge(e).u], ++deg[g.edge(e).v]});
  }
  return best;
}

namespace {

constexpr std::int32_t kNone = -1;

// Misra-Gries edge colouring on the subgraph spanned by a set of edges.
// Colours are indices 0..B-1 into the block until the final translation.
class FanColourer {
 public:
  FanColourer(const Graph& g, std::span<const EdgeId> subset, std::size_t palette_size)
      : subset_(subset.begin(), subset.end()), B_(palette_size) {
    std::vector<std::int32_t> local_of(g.vertex_count(), kNone);
    for (EdgeId e : subset_) {
      for (VertexId x : {g.edge(e).u, g.edge(e).v}) {
        if (local_of[x] == kNone) {
          local_of[x] = static_cast<std::int32_t>(global_.size());
          global_.push_back(x);
        }
      }
    }
    adj_.resize(global_.size());
    ends_.resize(subset_.size());
    for (std::size_t i = 0; i < subset_.size(); ++i) {
      const auto& e = g.edge(subset_[i]);
      const auto a = static_cast<std::uint32_t>(local_of[e.u]);
      const auto b = static_cast<std::uint32_t>(local_of[e.v]);
      ends_[i] = {a, b};
      adj_[a].push_back({b, static_cast<std::uint32_t>(i)});
      adj_[b].push_back({a, static_cast<std::uint32_t>(i)});
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end(),
                [&](const Arc& p, const Arc& q) { return global_[p.to] < global_[q.to]; });
    }
    at_.assign(global_.size() * B_, kNone);
    colour_.assign(subset_.size(), kNone);
    stamp_.assign(global_.size(), 0);
  }

  void run() {
    for (std::uint32_t e : insertion_order()) colour_edge(e);
  }

  Colour colour_index(std::size_t local_edge) const { return static_cast<Colour>(colour_[local_edge]); }
  const std::vector<EdgeId>& subset() const { return subset_; }

 private:
  struct Arc {
    std::uint32_t to;
    std::uint32_t edge;
  };

  std::int32_t& slot(std::uint32_t x, std::int32_t c) { return at_[x * B_ + static_cast<std::size_t>(c)]; }
  bool is_free(std::uint32_t x, std::int32_t c) const { return at_[x * B_ + static_cast<std::size_t>(c)] == kNone; }

  std::int32_t lowest_free(std::uint32_t x) const {
    for (std::size_t c = 0; c < B_; ++c) {
      if (at_[x * B_ + c] == kNone) return static_cast<std::int32_t>(c);
    }
    throw std::logic_error("vizing: vertex without a free colour");
  }

  std::uint32_t other(std::uint32_t e, std::uint32_t x) const {
    return ends_[e].first == x ? ends_[e].second : ends_[e].first;
  }

  void assign(std::uint32_t e, std::int32_t c) {
    colour_[e] = c;
    slot(ends_[e].first, c) = static_cast<std::int32_t>(e);
    slot(ends_[e].second, c) = static_cast<std::int32_t>(e);
  }

  void unassign(std::uint32_t e) {
    const std::int32_t c = colour_[e];
    if (c == kNone) return;
    slot(ends_[e].first, c) = kNone;
    slot(ends_[e].second, c) = kNone;
    colour_[e] = kNone;
  }

  std::uint32_t edge_between(std::uint32_t u, std::uint32_t x) const {
    for (const auto& arc : adj_[u]) {
      if (arc.to == x) return arc.edge;
    }
    throw std::logic_error("vizing: missing fan edge");
  }

  // Smallest-last vertex order; edges are inserted grouped by their later endpoint.
  std::vector<std::uint32_t> insertion_order() {
    const std::size_t n = global_.size();
    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (std::size_t x = 0; x < n; ++x) max_deg = std::max(max_deg, deg[x] = adj_[x].size());
    std::vector<std::set<std::pair<VertexId, std::uint32_t>>> buckets(max_deg + 1);
    for (std::uint32_t x = 0; x < n; ++x) buckets[deg[x]].insert({global_[x], x});
    std::vector<char> removed(n, 0);
    std::vector<std::uint32_t> removal;
    removal.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t lo = 0;
      while (buckets[lo].empty()) ++lo;
      const auto [gid, x] = *buckets[lo].begin();
      buckets[lo].erase(buckets[lo].begin());
      removed[x] = 1;
      removal.push_back(x);
      for (const auto& arc : adj_[x]) {
        if (removed[arc.to]) continue;
        buckets[deg[arc.to]].erase({global_[arc.to], arc.to});
        buckets[--deg[arc.to]].insert({global_[arc.to], arc.to});
      }
    }
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[removal[n - 1 - i]] = i;
    std::vector<std::uint32_t> order(ends_.size());
    std::iota(order.begin(), order.end(), 0U);
    auto key = [&](std::uint32_t e) {
      const std::size_t a = pos[ends_[e].first];
      const std::size_t b = pos[ends_[e].second];
      return std::pair{std::max(a, b), std::min(a, b)};
    };
    std::sort(order.begin(), order.end(), [&](std::uint32_t p, std::uint32_t q) { return key(p) < key(q); });
    pos_ = std::move(pos);
    return order;
  }

  void colour_edge(std::uint32_t e) {
    // Fan centre: the endpoint placed later in the degeneracy order.
    std::uint32_t u = ends_[e].first;
    std::uint32_t v0 = ends_[e].second;
    if (pos_[v0] > pos_[u]) std::swap(u, v0);

    ++epoch_;
    std::vector<std::uint32_t> fan{v0};
    stamp_[v0] = epoch_;
    for (bool grown = true; grown;) {
      grown = false;
      const std::uint32_t last = fan.back();
      for (const auto& arc : adj_[u]) {
        if (stamp_[arc.to] == epoch_ || colour_[arc.edge] == kNone) continue;
        if (is_free(last, colour_[arc.edge])) {
          fan.push_back(arc.to);
          stamp_[arc.to] = epoch_;
          grown = true;
          break;
        }
      }
    }

    const std::int32_t c = lowest_free(u);
    const std::int32_t d = lowest_free(fan.back());
    if (c != d) invert_path(u, c, d);

    // First fan prefix that is still a fan and ends at a vertex missing d.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const std::uint32_t fe = edge_between(u, fan[i]);
        if (colour_[fe] == kNone || !is_free(fan[i - 1], colour_[fe])) break;
      }
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw std::logic_error("vizing: no rotatable fan prefix");

    std::vector<std::int32_t> shifted(w);
    std::vector<std::uint32_t> fan_edges(w + 1);
    fan_edges[0] = e;
    for (std::size_t i = 1; i <= w; ++i) fan_edges[i] = edge_between(u, fan[i]);
    for (std::size_t i = 0; i < w; ++i) shifted[i] = colour_[fan_edges[i + 1]];
    for (std::size_t i = 1; i <= w; ++i) unassign(fan_edges[i]);
    for (std::size_t i = 0; i < w; ++i) assign(fan_edges[i], shifted[i]);
    assign(fan_edges[w], d);
  }

  // Swaps c and d along the path that leaves u on its d-edge (c is free at u).
  void invert_path(std::uint32_t u, std::int32_t c, std::int32_t d) {
    std::vector<std::uint32_t> path;
    std::uint32_t x = u;
    std::int32_t want = d;
    while (!is_free(x, want)) {
      const auto pe = static_cast<std::uint32_t>(at_[x * B_ + static_cast<std::size_t>(want)]);
      path.push_back(pe);
      x = other(pe, x);
      want = want == d ? c : d;
    }
    std::vector<std::int32_t> old(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      old[i] = colour_[path[i]];
      unassign(path[i]);
    }
    for (std::size_t i = 0; i < path.size(); ++i) assign(path[i], old[i] == c ? d : c);
  }

  std::vector<EdgeId> subset_;
  std::size_t B_;
  std::vector<VertexId> global_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends_;
  std::vector<std::int32_t> at_;
  std::vector<std::int32_t> colour_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::size_t> pos_;
};

}  // namespace

SubgraphAssignment vizing_on_subgraph(const Graph& g, std::span<const EdgeId> edge_subset,
                                      const ColourBlock& block) {
  {
    std::vector<char> seen(g.edge_count(), 0);
    for (EdgeId e : edge_subset) {
      if (e >= g.edge_count()) throw Error(ErrorCode::InvalidArgument, "edge id out of range");
      if (seen[e]++) throw Error(ErrorCode::InvalidArgument, "edge subset repeats edge " + std::to_string(e));
    }
  }
  const std::size_t need = subset_max_degree(g, edge_subset) + 1;
  if (edge_subset.empty()) return {};
  if (block.size() < need) {
    throw Error(ErrorCode::BlockTooSmall, "block of " + std::to_string(block.size()) +
                                              " colours; the subgraph needs " + std::to_string(need));
  }
  FanColourer colourer(g, edge_subset, block.size());
  colourer.run();
  SubgraphAssignment out;
  out.reserve(edge_subset.size());
  for (std::size_t i = 0; i < colourer.subset().size(); ++i) {
    out.emplace_back(colourer.subset()[i], block[colourer.colour_index(i)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeColouring vizing_colour(const Graph& g, const ColourBlock& block) {
  std::vector<EdgeId> all(g.edge_count());
  std::iota(all.begin(), all.end(), 0U);
  std::vector<Colour> colours(g.edge_count(), kNoColour);
  for (const auto& [e, c] : vizing_on_subgraph(g, all, block)) colours[e] = c;
  return EdgeColouring(std::move(colours));
}

EdgeColouring extend_partial(const Graph& g, const PartialColouring& partial, const ColourBlock& fresh_block) {
  if (partial.edge_count() != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "colouring does not match the graph's edge count");
  }
  const std::set<Colour> fresh(fresh_block.colours().begin(), fresh_block.colours().end());
  for (Colour c : partial.assignment()) {
    if (c != kNoColour && fresh.contains(c)) {
      throw Error(ErrorCode::BlockNotDisjoint, "fresh block reuses colour " + std::to_string(c));
    }
  }
  std::vector<Colour> colours(partial.assignment().begin(), partial.assignment().end());
  const auto uncoloured = partial.uncoloured();
  for (const auto& [e, c] : vizing_on_subgraph(g, uncoloured, fresh_block)) colours[e] = c;
  return EdgeColouring(std::move(colours));
}

}  // namespace chromadist
