#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::vector<std::vector<std::uint32_t>> apsp(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

namespace {

std::vector<std::set<Colour>> palettes(const Graph& g, const std::vector<Colour>& colours) {
  std::vector<std::set<Colour>> s(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (colours[e] == 0) continue;
    s[g.edge(e).u].insert(colours[e]);
    s[g.edge(e).v].insert(colours[e]);
  }
  return s;
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> conflicts(const Graph& g, const std::vector<Colour>& colours,
                                                     std::uint32_t r) {
  const auto d = apsp(g);
  const auto s = palettes(g, colours);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      if (d[u][v] >= 1 && d[u][v] <= r && s[u] == s[v]) out.emplace_back(u, v);
    }
  }
  return out;
}

bool proper(const Graph& g, const std::vector<Colour>& colours) {
  for (std::size_t a = 0; a < g.edge_count(); ++a) {
    for (std::size_t b = a + 1; b < g.edge_count(); ++b) {
      const auto& x = g.edge(a);
      const auto& y = g.edge(b);
      const bool touch = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
      if (touch && colours[a] != 0 && colours[a] == colours[b]) return false;
    }
  }
  return true;
}

namespace {

bool extend(const Graph& g, std::uint32_t r, std::uint32_t k, std::size_t e, std::vector<Colour>& colours) {
  if (e == g.edge_count()) return conflicts(g, colours, r).empty();
  const auto& ends = g.edge(e);
  for (Colour c = 1; c <= k; ++c) {
    bool clash = false;
    for (std::size_t f = 0; f < e && !clash; ++f) {
      const auto& other = g.edge(f);
      const bool touch = other.u == ends.u || other.u == ends.v || other.v == ends.u || other.v == ends.v;
      clash = touch && colours[f] == c;
    }
    if (clash) continue;
    colours[e] = c;
    if (extend(g, r, k, e + 1, colours)) return true;
  }
  colours[e] = 0;
  return false;
}

}  // namespace

std::optional<std::vector<Colour>> brute_force_colouring(const Graph& g, std::uint32_t r, std::uint32_t k) {
  std::vector<Colour> colours(g.edge_count(), 0);
  if (extend(g, r, k, 0, colours)) return colours;
  return std::nullopt;
}

std::optional<std::uint32_t> brute_force_index(const Graph& g, std::uint32_t r, std::uint32_t k_limit) {
  std::size_t delta = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) delta = std::max(delta, g.degree(v));
  for (auto k = static_cast<std::uint32_t>(delta); k <= k_limit; ++k) {
    if (brute_force_colouring(g, r, k)) return k;
  }
  return std::nullopt;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    if (!edges.empty()) return Graph(n, edges);
  }
}

std::vector<Colour> random_proper_colouring(const Graph& g, std::mt19937_64& rng, std::uint32_t palette_size) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::set<Colour>> used(g.vertex_count());
  std::vector<Colour> colours(g.edge_count(), 0);
  for (std::size_t e : order) {
    const auto& ends = g.edge(e);
    std::vector<Colour> free;
    for (Colour c = 1; c <= palette_size; ++c) {
      if (!used[ends.u].count(c) && !used[ends.v].count(c)) free.push_back(c);
    }
    const Colour c = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    colours[e] = c;
    used[ends.u].insert(c);
    used[ends.v].insert(c);
  }
  return colours;
}

}  // namespace oracle
