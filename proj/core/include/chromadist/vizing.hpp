#pragma once

#include <span>
#include <utility>
#include <vector>

#include "chromadist/colouring.hpp"
#include "chromadist/graph.hpp"

namespace chromadist {

/// An ordered list of distinct positive colours handed to a colouring pass.
class ColourBlock {
 public:
  ColourBlock() = default;
  /// Throws InvalidArgument on a zero or repeated colour.
  explicit ColourBlock(std::vector<Colour> colours);
  /// The consecutive block first, first+1, ..., first+size-1.
  static ColourBlock range(Colour first, std::size_t size);

  std::size_t size() const noexcept { return colours_.size(); }
  Colour operator[](std::size_t i) const { return colours_[i]; }
  const std::vector<Colour>& colours() const noexcept { return colours_; }

 private:
  std::vector<Colour> colours_;
};

using SubgraphAssignment = std::vector<std::pair<EdgeId, Colour>>;

/// Proper colouring of the edges in `edge_subset` (ids of g, no repeats)
/// drawn from `block`, built by fan rotation and alternating-path flips.
/// Returns (edge, colour) pairs in ascending edge order. Throws
/// BlockTooSmall unless |block| >= (max degree of the subset) + 1.
SubgraphAssignment vizing_on_subgraph(const Graph& g, std::span<const EdgeId> edge_subset,
                                      const ColourBlock& block);

/// Proper colouring of all of g from `block`; needs |block| >= Delta(g) + 1.
EdgeColouring vizing_colour(const Graph& g, const ColourBlock& block);

/// Colours the uncoloured edges of `partial` from `fresh_block`, leaving every
/// coloured edge untouched. Throws BlockNotDisjoint if the block shares a
/// colour with `partial`, BlockTooSmall unless |fresh_block| exceeds the
/// maximum uncoloured degree.
EdgeColouring extend_partial(const Graph& g, const PartialColouring& partial, const ColourBlock& fresh_block);

/// Largest number of `edge_subset` edges at one vertex.
std::size_t subset_max_degree(const Graph& g, std::span<const EdgeId> edge_subset);

}  // namespace chromadist
