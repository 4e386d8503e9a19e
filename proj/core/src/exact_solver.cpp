#include "chromadist/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>
#include <thread>

#include "chromadist/distance.hpp"
#include "chromadist/error.hpp"

namespace chromadist {

std::optional<EdgeOrder> parse_edge_order(std::string_view name) {
  if (name == "degeneracy") return EdgeOrder::Degeneracy;
  if (name == "input") return EdgeOrder::Input;
  if (name == "maxConflict" || name == "max-conflict") return EdgeOrder::MaxConflict;
  return std::nullopt;
}

std::string_view to_string(SolverStatus status) {
  switch (status) {
    case SolverStatus::Exact: return "Exact";
    case SolverStatus::LowerBoundOnly: return "LowerBoundOnly";
    case SolverStatus::Timeout: return "Timeout";
  }
  return "Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

// Edges grouped by their later endpoint in `vertex_order`, so a vertex's
// edges towards already-placed vertices are consecutive.
std::vector<EdgeId> edges_by_vertex_order(const Graph& g, const std::vector<VertexId>& vertex_order) {
  std::vector<std::size_t> pos(g.vertex_count());
  for (std::size_t i = 0; i < vertex_order.size(); ++i) pos[vertex_order[i]] = i;
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0U);
  auto key = [&](EdgeId e) {
    const auto a = pos[g.edge(e).u];
    const auto b = pos[g.edge(e).v];
    return std::tuple{std::max(a, b), std::min(a, b), e};
  };
  std::sort(order.begin(), order.end(), [&](EdgeId p, EdgeId q) { return key(p) < key(q); });
  return order;
}

std::vector<VertexId> smallest_last_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> removal;
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = 0;
    std::size_t best_deg = SIZE_MAX;
    for (VertexId v = 0; v < n; ++v) {
      if (!removed[v] && deg[v] < best_deg) {
        best = v;
        best_deg = deg[v];
      }
    }
    removed[best] = 1;
    removal.push_back(best);
    for (const auto& inc : g.incident(best)) {
      if (!removed[inc.neighbour]) --deg[inc.neighbour];
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

class Search {
 public:
  Search(const Graph& g, std::uint32_t r, const SolverConfig& config, Clock::time_point deadline)
      : g_(g), config_(config), deadline_(deadline) {
    const std::size_t n = g.vertex_count();
    rivals_.resize(n);
    for (const auto& p : r_adjacent_pairs(g, r, true)) {
      rivals_[p.u].push_back(p.v);
      rivals_[p.v].push_back(p.u);
    }
    switch (config.edge_order) {
      case EdgeOrder::Input:
        order_.resize(g.edge_count());
        std::iota(order_.begin(), order_.end(), 0U);
        break;
      case EdgeOrder::Degeneracy:
        order_ = edges_by_vertex_order(g, smallest_last_order(g));
        break;
      case EdgeOrder::MaxConflict: {
        std::vector<VertexId> vs(n);
        std::iota(vs.begin(), vs.end(), 0U);
        std::stable_sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
          if (rivals_[a].size() != rivals_[b].size()) return rivals_[a].size() > rivals_[b].size();
          return g.degree(a) > g.degree(b);
        });
        order_ = edges_by_vertex_order(g, vs);
        break;
      }
    }
  }

  enum class Outcome { Found, Refuted, Timeout };

  Outcome run(std::size_t k) {
    k_ = k;
    mask_.assign(g_.vertex_count(), 0);
    remaining_.resize(g_.vertex_count());
    for (VertexId v = 0; v < g_.vertex_count(); ++v) remaining_[v] = g_.degree(v);
    colour_.assign(g_.edge_count(), kNoColour);
    timed_out_ = false;
    const bool found = dfs(0, 0);
    if (found) return Outcome::Found;
    return timed_out_ ? Outcome::Timeout : Outcome::Refuted;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Colour>& colours() const { return colour_; }

 private:
  // A saturated vertex must differ from every saturated equal-degree rival.
  bool palette_ok(VertexId v) const {
    for (VertexId w : rivals_[v]) {
      if (remaining_[w] == 0 && mask_[w] == mask_[v]) return false;
    }
    return true;
  }

  bool dfs(std::size_t depth, std::size_t used) {
    if (depth == order_.size()) return true;
    if ((++nodes_ & 0x3FF) == 0 && Clock::now() > deadline_) timed_out_ = true;
    if (timed_out_) return false;
    const EdgeId e = order_[depth];
    const VertexId a = g_.edge(e).u;
    const VertexId b = g_.edge(e).v;
    const std::size_t limit = config_.symmetry_break ? std::min(k_, used + 1) : k_;
    const std::uint64_t blocked = mask_[a] | mask_[b];
    for (std::size_t c = 0; c < limit; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if (blocked & bit) continue;
      mask_[a] |= bit;
      mask_[b] |= bit;
      --remaining_[a];
      --remaining_[b];
      colour_[e] = static_cast<Colour>(c + 1);
      const bool ok = (remaining_[a] != 0 || palette_ok(a)) && (remaining_[b] != 0 || palette_ok(b));
      if (ok && dfs(depth + 1, std::max(used, c + 1))) return true;
      colour_[e] = kNoColour;
      ++remaining_[a];
      ++remaining_[b];
      mask_[a] &= ~bit;
      mask_[b] &= ~bit;
      if (timed_out_) return false;
    }
    return false;
  }

  const Graph& g_;
  SolverConfig config_;
  Clock::time_point deadline_;
  std::vector<std::vector<VertexId>> rivals_;
  std::vector<EdgeId> order_;
  std::size_t k_ = 0;
  std::vector<std::uint64_t> mask_;
  std::vector<std::size_t> remaining_;
  std::vector<Colour> colour_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

SolverResult chi_exact(const Graph& g, std::uint32_t r, const SolverConfig& config) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  if (!g.isolated_edges().empty()) {
    throw Error(ErrorCode::IsolatedEdge, "graph has a K2 component; no distinguishing colouring exists");
  }
  const std::size_t k_max = config.k_max.value_or(kMaxSolverColours);
  if (k_max > kMaxSolverColours) {
    throw Error(ErrorCode::InvalidArgument, "k_max above " + std::to_string(kMaxSolverColours));
  }
  if (k_max < g.max_degree()) {
    throw Error(ErrorCode::BudgetExceeded, "k_max " + std::to_string(k_max) + " is below the maximum degree " +
                                               std::to_string(g.max_degree()));
  }
  if (!(config.time_limit_seconds > 0)) throw Error(ErrorCode::InvalidArgument, "time limit must be positive");

  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.time_limit_seconds));
  Search search(g, r, config, deadline);
  SolverResult result;
  result.k_max = k_max;
  for (std::size_t k = std::max<std::size_t>(g.max_degree(), 1); k <= k_max; ++k) {
    const auto outcome = search.run(k);
    result.nodes_explored = search.nodes();
    if (outcome == Search::Outcome::Found) {
      result.status = SolverStatus::Exact;
      result.value = k;
      result.witness = EdgeColouring(search.colours());
      return result;
    }
    if (outcome == Search::Outcome::Timeout) {
      result.status = SolverStatus::Timeout;
      result.value = k;
      return result;
    }
  }
  result.status = SolverStatus::LowerBoundOnly;
  result.value = k_max + 1;
  return result;
}

bool is_c5(const Graph& g) {
  if (g.vertex_count() != 5 || g.edge_count() != 5) return false;
  for (VertexId v = 0; v < 5; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

ScanReport conjecture_scan(std::span<const Graph> graphs, std::uint32_t r, const ScanOptions& options) {
  ScanReport report;
  report.r = r;
  report.entries.resize(graphs.size());
  const bool zhang = !options.custom_c.has_value();
  const std::size_t c = options.custom_c.value_or(2);

  auto solve_one = [&](std::size_t i) {
    const Graph& g = graphs[i];
    ScanEntry& entry = report.entries[i];
    entry.index = i;
    entry.n = g.vertex_count();
    entry.m = g.edge_count();
    entry.max_degree = g.max_degree();
    entry.bound = g.max_degree() + c;
    if (!g.isolated_edges().empty()) {
      entry.excluded = (g.edge_count() == 1 && g.vertex_count() == 2) ? "K2" : "isolated-edge";
      return;
    }
    if (zhang && r == 1 && is_c5(g)) entry.excluded = "C5";
    SolverConfig cfg = options.solver;
    // Values above the bound only need to be detected, not pinned down.
    if (!cfg.k_max) cfg.k_max = std::min(kMaxSolverColours, std::max(entry.bound + 1, g.max_degree()));
    try {
      entry.result = chi_exact(g, r, cfg);
    } catch (const Error& err) {
      entry.error = err.what();
      return;
    }
    const auto& res = *entry.result;
    entry.violation = entry.excluded.empty() && res.value > entry.bound && res.status != SolverStatus::Timeout;
  };

  std::size_t threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(graphs.size(), 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) solve_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) solve_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& entry : report.entries) {
    report.violations += entry.violation;
    report.excluded += !entry.excluded.empty();
    report.timeouts += entry.result && entry.result->status == SolverStatus::Timeout;
  }
  return report;
}

}  // namespace chromadist
