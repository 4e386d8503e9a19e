#include "chromadist/colouring.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "chromadist/error.hpp"

namespace chromadist {

void PartialColouring::set(EdgeId e, Colour c) {
  if (c == kNoColour) throw Error(ErrorCode::InvalidArgument, "colours must be positive");
  colours_[e] = c;
}

bool PartialColouring::complete() const {
  return std::none_of(colours_.begin(), colours_.end(), [](Colour c) { return c == kNoColour; });
}

std::size_t PartialColouring::uncoloured_count() const {
  return static_cast<std::size_t>(std::count(colours_.begin(), colours_.end(), kNoColour));
}

std::vector<EdgeId> PartialColouring::uncoloured() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < colours_.size(); ++e) {
    if (colours_[e] == kNoColour) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> PartialColouring::uncoloured_at(const Graph& g, VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& inc : g.incident(v)) {
    if (colours_[inc.edge] == kNoColour) out.push_back(inc.edge);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PartialColouring::coloured_degree(const Graph& g, VertexId v) const {
  std::size_t n = 0;
  for (const auto& inc : g.incident(v)) n += colours_[inc.edge] != kNoColour;
  return n;
}

EdgeColouring::EdgeColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {
  auto it = std::find(colours_.begin(), colours_.end(), kNoColour);
  if (it != colours_.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "edge " + std::to_string(it - colours_.begin()) + " has no colour in a total colouring");
  }
}

EdgeColouring EdgeColouring::from_partial(const PartialColouring& partial) {
  return EdgeColouring(std::vector<Colour>(partial.assignment().begin(), partial.assignment().end()));
}

std::size_t EdgeColouring::colour_count() const { return distinct_colours(colours_); }

Colour EdgeColouring::max_colour() const {
  return colours_.empty() ? kNoColour : *std::max_element(colours_.begin(), colours_.end());
}

std::size_t distinct_colours(std::span<const Colour> assignment) {
  std::vector<Colour> sorted;
  sorted.reserve(assignment.size());
  for (Colour c : assignment) {
    if (c != kNoColour) sorted.push_back(c);
  }
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

ColourSet palette(const Graph& g, std::span<const Colour> assignment, VertexId v) {
  ColourSet out;
  out.reserve(g.degree(v));
  for (const auto& inc : g.incident(v)) {
    if (assignment[inc.edge] != kNoColour) out.push_back(assignment[inc.edge]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t colour_sum(const Graph& g, std::span<const Colour> assignment, VertexId v) {
  std::uint64_t s = 0;
  for (const auto& inc : g.incident(v)) s += assignment[inc.edge];
  return s;
}

ProperCheck is_proper(const Graph& g, std::span<const Colour> assignment) {
  std::unordered_map<Colour, EdgeId> seen;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    seen.clear();
    for (const auto& inc : g.incident(v)) {
      const Colour c = assignment[inc.edge];
      if (c == kNoColour) continue;
      auto [it, fresh] = seen.emplace(c, inc.edge);
      if (!fresh) {
        return {false, std::pair{std::min(it->second, inc.edge), std::max(it->second, inc.edge)}};
      }
    }
  }
  return {};
}

std::size_t symmetric_difference_size(const ColourSet& a, const ColourSet& b) {
  std::size_t i = 0, j = 0, common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++common;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return a.size() + b.size() - 2 * common;
}

std::size_t symmetric_difference_size(const Graph& g, std::span<const Colour> assignment, VertexId u,
                                      VertexId v) {
  if (u == v) throw Error(ErrorCode::InvalidArgument, "symmetric difference needs distinct vertices");
  return symmetric_difference_size(palette(g, assignment, u), palette(g, assignment, v));
}

}  // namespace chromadist
