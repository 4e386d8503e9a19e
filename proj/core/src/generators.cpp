#include "chromadist/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "chromadist/distance.hpp"
#include "chromadist/error.hpp"
#include "chromadist/rng.hpp"

namespace chromadist {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Saturating product; returns nullopt once the value passes `cap`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return std::nullopt;
    out *= base;
  }
  return out;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return std::nullopt;
  return a * b;
}

void check_edge_budget(std::uint64_t edges, const GeneratorLimits& limits, const std::string& what) {
  if (edges > limits.max_edges) {
    throw Error(ErrorCode::SizeCap, what + " needs " + std::to_string(edges) +
                                        " edges, above the cap of " + std::to_string(limits.max_edges));
  }
}

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

EdgeList random_regular_edges(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(derive_seed(seed, "gen.random_regular"));
  std::vector<VertexId> points;
  EdgeList edges;
  std::unordered_set<std::uint64_t> present;
  constexpr int kMaxRestarts = 10'000;
  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    points.clear();
    for (VertexId v = 0; v < n; ++v) points.insert(points.end(), d, v);
    edges.clear();
    present.clear();
    std::size_t rejections = 0;
    bool dead_end = false;
    while (!points.empty()) {
      const std::size_t size = points.size();
      std::size_t i = rng.below(size);
      std::size_t j = rng.below(size - 1);
      if (j >= i) ++j;
      const VertexId u = points[i];
      const VertexId v = points[j];
      if (u != v && !present.contains(pair_key(u, v))) {
        present.insert(pair_key(u, v));
        edges.emplace_back(std::min(u, v), std::max(u, v));
        if (i < j) std::swap(i, j);
        points[i] = points.back();
        points.pop_back();
        points[j] = points.back();
        points.pop_back();
        rejections = 0;
        continue;
      }
      if (++rejections < 8 * size + 64) continue;
      // Many rejections in a row: look for any admissible pair at all.
      bool any = false;
      for (std::size_t a = 0; a < size && !any; ++a) {
        for (std::size_t b = a + 1; b < size && !any; ++b) {
          any = points[a] != points[b] && !present.contains(pair_key(points[a], points[b]));
        }
      }
      if (!any) {
        dead_end = true;
        break;
      }
      rejections = 0;
    }
    if (!dead_end) {
      std::sort(edges.begin(), edges.end());
      return edges;
    }
  }
  throw Error(ErrorCode::InfeasibleRegular, "pairing model did not complete after repeated restarts");
}

EdgeList de_bruijn_edges(std::size_t t, std::size_t k, std::uint64_t order) {
  EdgeList edges;
  if (k == 1) {
    for (VertexId a = 0; a < order; ++a) {
      for (VertexId b = a + 1; b < order; ++b) edges.emplace_back(a, b);
    }
    return edges;
  }
  const std::uint64_t suffix_mod = order / t;  // t^{k-1}
  std::unordered_set<std::uint64_t> present;
  for (std::uint64_t a = 0; a < order; ++a) {
    // Successors: drop a's first letter, append any letter.
    for (std::uint64_t x = 0; x < t; ++x) {
      const std::uint64_t b = (a % suffix_mod) * t + x;
      if (b == a) continue;
      const auto u = static_cast<VertexId>(std::min(a, b));
      const auto v = static_cast<VertexId>(std::max(a, b));
      if (present.insert(pair_key(u, v)).second) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::optional<ClassicKind> parse_classic_kind(std::string_view name) {
  if (name == "path") return ClassicKind::Path;
  if (name == "cycle") return ClassicKind::Cycle;
  if (name == "complete") return ClassicKind::Complete;
  if (name == "star") return ClassicKind::Star;
  if (name == "random_regular") return ClassicKind::RandomRegular;
  if (name == "path_power") return ClassicKind::PathPower;
  return std::nullopt;
}

std::string_view to_string(ClassicKind kind) {
  switch (kind) {
    case ClassicKind::Path: return "path";
    case ClassicKind::Cycle: return "cycle";
    case ClassicKind::Complete: return "complete";
    case ClassicKind::Star: return "star";
    case ClassicKind::RandomRegular: return "random_regular";
    case ClassicKind::PathPower: return "path_power";
  }
  return "unknown";
}

Graph gen_classic(ClassicKind kind, std::size_t n, std::optional<std::size_t> extra, std::uint64_t seed,
                  const GeneratorLimits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  EdgeList edges;
  switch (kind) {
    case ClassicKind::Path:
      for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case ClassicKind::Cycle:
      if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs n >= 3");
      for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, static_cast<VertexId>(n - 1));
      break;
    case ClassicKind::Complete: {
      auto m = checked_mul(n, n - 1);
      check_edge_budget(m ? *m / 2 : UINT64_MAX, limits, "complete graph");
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
      break;
    }
    case ClassicKind::Star:
      for (VertexId i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case ClassicKind::RandomRegular: {
      if (!extra) throw Error(ErrorCode::InvalidArgument, "random_regular needs a degree");
      const std::size_t d = *extra;
      if (d >= n || (n * d) % 2 != 0) {
        throw Error(ErrorCode::InfeasibleRegular,
                    "no " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
      }
      check_edge_budget(n * d / 2, limits, "random regular graph");
      edges = random_regular_edges(n, d, seed);
      break;
    }
    case ClassicKind::PathPower: {
      if (!extra || *extra < 1) throw Error(ErrorCode::InvalidArgument, "path_power needs a power k >= 1");
      const std::size_t k = *extra;
      check_edge_budget(n * std::min(k, n), limits, "path power");
      for (VertexId i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n && j <= i + k; ++j) edges.emplace_back(i, static_cast<VertexId>(j));
      }
      break;
    }
  }
  return Graph(n, edges);
}

Graph gen_de_bruijn(const DeBruijnSpec& spec, const GeneratorLimits& limits) {
  if (spec.t < 1 || spec.k < 1) throw Error(ErrorCode::InvalidArgument, "de Bruijn needs t >= 1 and k >= 1");
  const auto order = checked_pow(spec.t, spec.k, UINT32_MAX - 1);
  if (!order) {
    throw Error(ErrorCode::SizeCap, "t^k = " + std::to_string(spec.t) + "^" + std::to_string(spec.k) +
                                        " does not fit the vertex id range");
  }
  const std::uint64_t edge_bound = spec.k == 1 ? *order * (*order - 1) / 2 : *order * spec.t;
  check_edge_budget(edge_bound, limits, "de Bruijn graph");
  return Graph(*order, de_bruijn_edges(spec.t, spec.k, *order));
}

std::optional<std::uint64_t> lower_bound_special_count(std::size_t r, std::size_t N) {
  if (r < 3 || N < 1) return std::nullopt;
  auto a = checked_pow(static_cast<std::uint64_t>(N) * (r - 1), r - 1, UINT64_MAX);
  auto b = checked_pow(r - 2, r - 2, UINT64_MAX);
  if (!a || !b) return std::nullopt;
  auto ab = checked_mul(*a, *b);
  if (!ab) return std::nullopt;
  return checked_mul(2, *ab);
}

LowerBoundInstance gen_lower_bound_instance(std::size_t r, std::size_t N, const GeneratorLimits& limits) {
  if (r < 3 || N < 1) throw Error(ErrorCode::InvalidArgument, "lower-bound instance needs r >= 3 and N >= 1");
  const std::string label = "lower-bound instance (r=" + std::to_string(r) + ", N=" + std::to_string(N) + ")";
  const auto t = checked_mul(static_cast<std::uint64_t>(N) * (r - 2), r - 1);
  const auto order = t ? checked_pow(*t, r - 2, UINT32_MAX) : std::nullopt;
  if (!order) throw Error(ErrorCode::SizeCap, label + " backbone order overflows");
  const auto cliques = checked_mul(*order, 2 * N);
  const auto clique_edges = cliques ? checked_mul(*cliques, r * (r - 1) / 2) : std::nullopt;
  const auto clique_vertices = cliques ? checked_mul(*cliques, r - 1) : std::nullopt;
  if (!clique_edges || !clique_vertices || *order + *clique_vertices > UINT32_MAX) {
    throw Error(ErrorCode::SizeCap, label + " is too large");
  }
  const std::uint64_t backbone_edge_bound = (r - 2 == 1) ? *order * (*order - 1) / 2 : *order * *t;
  check_edge_budget(backbone_edge_bound + *clique_edges, limits, label);

  LowerBoundInstance inst;
  inst.r = r;
  inst.N = N;
  inst.core = gen_de_bruijn({static_cast<std::size_t>(*t), r - 2}, limits);

  EdgeList edges(inst.core.edges().size());
  std::transform(inst.core.edges().begin(), inst.core.edges().end(), edges.begin(),
                 [](const EdgeEnds& e) { return std::pair{e.u, e.v}; });
  auto next = static_cast<VertexId>(*order);
  inst.attachment.resize(*order);
  for (VertexId b = 0; b < *order; ++b) {
    inst.attachment[b].resize(2 * N);
    for (std::size_t j = 0; j < 2 * N; ++j) {
      auto& members = inst.attachment[b][j];
      for (std::size_t i = 0; i + 1 < r; ++i) members.push_back(next++);
      for (VertexId x : members) edges.emplace_back(b, x);
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) edges.emplace_back(members[x], members[y]);
      }
      inst.special_vertices.insert(inst.special_vertices.end(), members.begin(), members.end());
    }
  }
  inst.full = Graph(next, edges);

  // Invariants: the special count formula, the degree bound, and pairwise
  // distance <= r. Specials sit at distance 1 from their core vertex, so the
  // distance check reduces to diam(core) <= r - 2.
  const auto expected = lower_bound_special_count(r, N);
  if (!expected || *expected != inst.special_vertices.size()) {
    throw std::logic_error("lower-bound instance: special vertex count mismatch");
  }
  for (VertexId s : inst.special_vertices) {
    if (inst.full.degree(s) != r - 1) throw std::logic_error("lower-bound instance: special vertex degree");
  }
  if (inst.full.max_degree() > 2 * N * (r - 1) * (r - 1)) {
    throw std::logic_error("lower-bound instance: maximum degree bound violated");
  }
  // Full all-sources BFS is quadratic; past 4096 backbone vertices only a
  // spread of sources is checked.
  const std::uint64_t stride = *order <= 4096 ? 1 : *order / 16;
  for (std::uint64_t b = 0; b < *order; b += stride) {
    for (std::uint32_t d : bfs_distances(inst.core, static_cast<VertexId>(b))) {
      if (d > r - 2) throw std::logic_error("lower-bound instance: backbone diameter exceeds r - 2");
    }
  }
  return inst;
}

}  // namespace chromadist
