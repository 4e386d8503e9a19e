#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chromadist/graph.hpp"
#include "chromadist/types.hpp"

namespace chromadist {

/// A set of colours, sorted ascending without repeats.
using ColourSet = std::vector<Colour>;

/// Assignment of colours to some edges; the rest are uncoloured.
class PartialColouring {
 public:
  PartialColouring() = default;
  explicit PartialColouring(std::size_t edge_count) : colours_(edge_count, kNoColour) {}
  explicit PartialColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  std::size_t edge_count() const noexcept { return colours_.size(); }
  Colour operator[](EdgeId e) const { return colours_[e]; }
  bool coloured(EdgeId e) const { return colours_[e] != kNoColour; }

  void set(EdgeId e, Colour c);
  void clear(EdgeId e) { colours_[e] = kNoColour; }

  bool complete() const;
  std::size_t uncoloured_count() const;
  /// The uncoloured edge set U, ascending.
  std::vector<EdgeId> uncoloured() const;
  /// U(v): uncoloured edges incident with v, ascending.
  std::vector<EdgeId> uncoloured_at(const Graph& g, VertexId v) const;
  /// Number of coloured edges at v.
  std::size_t coloured_degree(const Graph& g, VertexId v) const;

  std::span<const Colour> assignment() const noexcept { return colours_; }

 private:
  std::vector<Colour> colours_;
};

/// Total assignment: every edge carries a positive colour.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  /// Throws InvalidArgument if any entry is kNoColour.
  explicit EdgeColouring(std::vector<Colour> colours);
  /// Throws InvalidArgument if `partial` leaves an edge uncoloured.
  static EdgeColouring from_partial(const PartialColouring& partial);

  std::size_t edge_count() const noexcept { return colours_.size(); }
  Colour operator[](EdgeId e) const { return colours_[e]; }

  /// Number of distinct colours used.
  std::size_t colour_count() const;
  Colour max_colour() const;

  PartialColouring to_partial() const { return PartialColouring(colours_); }
  std::span<const Colour> assignment() const noexcept { return colours_; }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  std::vector<Colour> colours_;
};

/// Distinct colours in an assignment (uncoloured entries ignored).
std::size_t distinct_colours(std::span<const Colour> assignment);

/// S(v): colours on the coloured edges at v.
ColourSet palette(const Graph& g, std::span<const Colour> assignment, VertexId v);
inline ColourSet palette(const Graph& g, const EdgeColouring& c, VertexId v) {
  return palette(g, c.assignment(), v);
}
inline ColourSet palette(const Graph& g, const PartialColouring& c, VertexId v) {
  return palette(g, c.assignment(), v);
}

/// s(v): sum of colours on the coloured edges at v.
std::uint64_t colour_sum(const Graph& g, std::span<const Colour> assignment, VertexId v);
inline std::uint64_t colour_sum(const Graph& g, const EdgeColouring& c, VertexId v) {
  return colour_sum(g, c.assignment(), v);
}
inline std::uint64_t colour_sum(const Graph& g, const PartialColouring& c, VertexId v) {
  return colour_sum(g, c.assignment(), v);
}

struct ProperCheck {
  bool proper = true;
  /// First clash found: two incident coloured edges with equal colour.
  std::optional<std::pair<EdgeId, EdgeId>> violation;
};

/// Properness; uncoloured edges never clash.
ProperCheck is_proper(const Graph& g, std::span<const Colour> assignment);
inline ProperCheck is_proper(const Graph& g, const EdgeColouring& c) { return is_proper(g, c.assignment()); }
inline ProperCheck is_proper(const Graph& g, const PartialColouring& c) { return is_proper(g, c.assignment()); }

/// |S(u) symmetric-difference S(v)|. Throws InvalidArgument when u == v.
std::size_t symmetric_difference_size(const Graph& g, std::span<const Colour> assignment, VertexId u,
                                      VertexId v);
inline std::size_t symmetric_difference_size(const Graph& g, const PartialColouring& c, VertexId u, VertexId v) {
  return symmetric_difference_size(g, c.assignment(), u, v);
}
inline std::size_t symmetric_difference_size(const Graph& g, const EdgeColouring& c, VertexId u, VertexId v) {
  return symmetric_difference_size(g, c.assignment(), u, v);
}

/// Size of the symmetric difference of two sorted colour sets.
std::size_t symmetric_difference_size(const ColourSet& a, const ColourSet& b);

}  // namespace chromadist
