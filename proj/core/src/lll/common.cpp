#include "chromadist/lll/common.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "chromadist/error.hpp"
#include "chromadist/verify.hpp"

namespace chromadist::lll {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidArgument, "cannot parse epsilon component '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Epsilon Epsilon::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num <= 0 || num > den) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1]");
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Epsilon Epsilon::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return of(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 12) throw Error(ErrorCode::InvalidArgument, "epsilon has too many decimals");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t whole = dot == 0 ? 0 : parse_int(text.substr(0, dot));
    const std::int64_t part = frac.empty() ? 0 : parse_int(frac);
    return of(whole * den + part, den);
  }
  return of(parse_int(text), 1);
}

std::string Epsilon::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::DenseA_v: return "DenseA_v";
    case EventKind::DenseA_uv: return "DenseA_uv";
    case EventKind::StageTwoA_uS: return "StageTwoA_uS";
    case EventKind::StageTwoB_uv: return "StageTwoB_uv";
    case EventKind::AsymD_uv: return "AsymD_uv";
    case EventKind::AsymD_vi: return "AsymD_vi";
    case EventKind::AsymA_v0: return "AsymA_v0";
    case EventKind::AsymA_vi: return "AsymA_vi";
    case EventKind::AsymB_uv: return "AsymB_uv";
  }
  return "Unknown";
}

std::vector<VertexId> closed_neighbourhood(const Graph& g, std::span<const VertexId> scope) {
  std::vector<VertexId> out(scope.begin(), scope.end());
  for (VertexId v : scope) {
    for (const auto& inc : g.incident(v)) out.push_back(inc.neighbour);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeId> dependency_edges(const Graph& g, std::span<const VertexId> scope) {
  std::vector<EdgeId> out;
  for (VertexId x : closed_neighbourhood(g, scope)) {
    for (const auto& inc : g.incident(x)) out.push_back(inc.edge);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RepairRecord> repair_conflicts(const Graph& g, EdgeColouring& colouring, std::uint32_t r) {
  if (!is_proper(g, colouring).proper) {
    throw Error(ErrorCode::InvalidArgument, "repair needs a proper colouring");
  }
  std::vector<RepairRecord> repairs;
  std::vector<Colour> colours(colouring.assignment().begin(), colouring.assignment().end());
  Colour next_fresh = colouring.max_colour() + 1;
  for (;;) {
    const auto report = verify_distinguishing(g, EdgeColouring(colours), r);
    if (report.conflict_count == 0) break;
    if (!report.isolated_edges.empty()) {
      throw Error(ErrorCode::IsolatedEdge, "K2 components cannot be distinguished");
    }
    for (const auto& conflict : report.conflicts) {
      // Earlier repairs in this sweep may already have separated the pair.
      if (palette(g, colours, conflict.u) != palette(g, colours, conflict.v)) continue;
      EdgeId chosen = Graph::kNoEdge;
      for (const auto& inc : g.incident(conflict.u)) {
        if (inc.neighbour == conflict.v) continue;
        if (chosen == Graph::kNoEdge || colours[inc.edge] > colours[chosen]) chosen = inc.edge;
      }
      if (chosen == Graph::kNoEdge) throw std::logic_error("repair: conflicting vertex has no usable edge");
      repairs.push_back({conflict.u, conflict.v, chosen, colours[chosen], next_fresh});
      colours[chosen] = next_fresh++;
    }
  }
  colouring = EdgeColouring(std::move(colours));
  return repairs;
}

}  // namespace chromadist::lll
