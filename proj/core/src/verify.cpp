#include "chromadist/verify.hpp"

#include <algorithm>

#include "chromadist/error.hpp"

namespace chromadist {

namespace {

std::uint64_t hash_palette(const ColourSet& s) {
  std::uint64_t h = 0x84222325CBF29CE4ULL ^ s.size();
  for (Colour c : s) {
    h ^= c + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ConflictReport verify_impl(const Graph& g, std::span<const Colour> assignment, bool total, std::uint32_t r,
                           const VerifyOptions& options) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  if (assignment.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "colouring does not match the graph's edge count");
  }
  ConflictReport report;
  report.r = r;
  const auto proper = is_proper(g, assignment);
  report.proper = proper.proper;
  report.proper_violation = proper.violation;
  report.colours_used = distinct_colours(assignment);
  report.isolated_edges = g.isolated_edges();

  const std::size_t n = g.vertex_count();
  std::vector<ColourSet> palettes(n);
  std::vector<std::uint64_t> hashes(n);
  for (VertexId v = 0; v < n; ++v) {
    palettes[v] = palette(g, assignment, v);
    hashes[v] = hash_palette(palettes[v]);
  }
  const bool degree_shortcut = total && report.proper;

  std::vector<VertexId> stamp(n, static_cast<VertexId>(-1));
  std::vector<VertexId> frontier;
  std::vector<VertexId> next;
  std::vector<Conflict> local;
  for (VertexId s = 0; s < n; ++s) {
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
          if (y < s) continue;
          ++report.checked_pairs;
          if (degree_shortcut && g.degree(y) != g.degree(s)) continue;
          if (hashes[y] == hashes[s] && palettes[y] == palettes[s]) local.push_back({s, y, depth, {}});
        }
      }
      frontier.swap(next);
    }
    std::sort(local.begin(), local.end(), [](const Conflict& a, const Conflict& b) { return a.v < b.v; });
    for (auto& c : local) {
      ++report.conflict_count;
      if (report.conflicts.size() < options.max_listed) {
        c.palette = palettes[c.u];
        report.conflicts.push_back(std::move(c));
      }
    }
  }
  return report;
}

}  // namespace

ConflictReport verify_distinguishing(const Graph& g, const EdgeColouring& colouring, std::uint32_t r,
                                     const VerifyOptions& options) {
  return verify_impl(g, colouring.assignment(), true, r, options);
}

ConflictReport verify_distinguishing(const Graph& g, const PartialColouring& colouring, std::uint32_t r,
                                     const VerifyOptions& options) {
  return verify_impl(g, colouring.assignment(), colouring.complete(), r, options);
}

}  // namespace chromadist
