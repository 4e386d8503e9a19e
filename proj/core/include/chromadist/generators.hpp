#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "chromadist/graph.hpp"

namespace chromadist {

struct GeneratorLimits {
  std::size_t max_edges = 5'000'000;
};

enum class ClassicKind { Path, Cycle, Complete, Star, RandomRegular, PathPower };

std::optional<ClassicKind> parse_classic_kind(std::string_view name);
std::string_view to_string(ClassicKind kind);

/// Classic families on n vertices. `extra` is the degree for RandomRegular and
/// the power k for PathPower (vertices i, j adjacent iff 1 <= |i-j| <= k).
///
/// RandomRegular uses the pairing model, pairing points one at a time and
/// rejecting a pair that would form a loop or a repeated edge; a dead end
/// restarts the whole pairing. Throws InfeasibleRegular when n*d is odd or d >= n.
Graph gen_classic(ClassicKind kind, std::size_t n, std::optional<std::size_t> extra = std::nullopt,
                  std::uint64_t seed = 0, const GeneratorLimits& limits = {});

struct DeBruijnSpec {
  std::size_t t = 2;  // alphabet size
  std::size_t k = 1;  // word length
};

/// Undirected de Bruijn graph on the t^k words of length k, each word encoded
/// as a base-t integer with the first letter most significant. Distinct words
/// are adjacent when one's (k-1)-suffix is the other's (k-1)-prefix; for k = 1
/// every pair is adjacent.
Graph gen_de_bruijn(const DeBruijnSpec& spec, const GeneratorLimits& limits = {});

struct LowerBoundInstance {
  std::size_t r = 0;
  std::size_t N = 0;
  Graph core;  // D_{N(r-2)(r-1), r-2}
  Graph full;  // core with 2N copies of K_r glued at each core vertex
  std::vector<VertexId> special_vertices;  // the degree r-1 clique vertices
  /// attachment[b][j] = the r-1 non-core vertices of the j-th clique glued at core vertex b.
  /// Each clique is glued through its lowest-id vertex, which is identified with b.
  std::vector<std::vector<std::vector<VertexId>>> attachment;
};

/// Expected special-vertex count 2[N(r-1)]^{r-1}(r-2)^{r-2}, or nullopt on overflow.
std::optional<std::uint64_t> lower_bound_special_count(std::size_t r, std::size_t N);

/// Builds the extremal instance and re-checks its invariants. Throws SizeCap
/// when the full graph would exceed the limits (use the palette-count
/// certificate for those parameters instead).
LowerBoundInstance gen_lower_bound_instance(std::size_t r, std::size_t N,
                                            const GeneratorLimits& limits = {});

}  // namespace chromadist
