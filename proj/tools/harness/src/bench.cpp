#include "chromadist/harness/bench.hpp"

#include <iomanip>
#include <sstream>

#include "chromadist/error.hpp"
#include "chromadist/exact_solver.hpp"
#include "chromadist/extremal/certificates.hpp"
#include "chromadist/generators.hpp"
#include "chromadist/io.hpp"
#include "chromadist/lll/census.hpp"
#include "chromadist/lll/dense.hpp"
#include "chromadist/rng.hpp"

namespace chromadist::harness {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

template <class T>
std::string str(const T& x) {
  return std::to_string(x);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(cells[i]);
    }
    out += '\n';
  };
  line(columns);
  for (const auto& row : rows) line(row);
  return out;
}

bool is_bench_suite(std::string_view name) {
  for (auto s : kBenchSuites) {
    if (s == name) return true;
  }
  return false;
}

Table bench_regular_sweep(std::uint64_t seed) {
  Table t;
  t.columns = {"d",           "n",          "r",           "cell",      "seed",        "status",
               "colours_pre", "colours",    "bound",       "bound_ok",  "resamples_1", "resamples_2",
               "repairs",     "conflicts",  "l_vertices",  "flagged",   "error"};
  std::uint64_t cell = 0;
  for (std::size_t d : {6, 8, 10}) {
    for (std::uint32_t r : {1u, 2u}) {
      for (int rep = 0; rep < 5; ++rep, ++cell) {
        const std::uint64_t run_seed = derive_seed(seed, "regular-sweep", cell);
        std::vector<std::string> row = {str(d), "200", str(r), str(cell), str(run_seed)};
        try {
          const auto g = gen_classic(ClassicKind::RandomRegular, 200, d, derive_seed(run_seed, "graph"));
          const auto res = lll::construct_dense(g, r, lll::Epsilon::of(1, 1), run_seed);
          const auto& rep_ = res.report;
          const auto& diag = res.diagnostics;
          row.insert(row.end(), {"ok", str(rep_.colours_used_pre_repair), str(rep_.colours_used),
                                 str(rep_.theorem_bound), rep_.bound_respected_pre_repair ? "1" : "0",
                                 str(diag.stage_one.resamples), str(diag.stage_two.resamples),
                                 str(rep_.repairs.size()), str(rep_.final_conflicts), str(diag.l_vertices),
                                 (diag.stage_one.flagged || diag.stage_two.flagged) ? "1" : "0", ""});
        } catch (const std::exception& e) {
          row.insert(row.end(), {"error", "", "", "", "", "", "", "", "", "", "", e.what()});
        }
        t.rows.push_back(std::move(row));
      }
    }
  }
  return t;
}

std::vector<Graph> builtin_small_corpus() {
  std::vector<Graph> out;
  out.push_back(gen_classic(ClassicKind::Path, 2));
  for (std::size_t n = 3; n <= 6; ++n) {
    out.push_back(gen_classic(ClassicKind::Path, n));
    out.push_back(gen_classic(ClassicKind::Cycle, n));
    out.push_back(gen_classic(ClassicKind::Star, n));
    out.push_back(gen_classic(ClassicKind::Complete, n));
  }
  return out;
}

Table bench_conjecture_scan(const std::vector<Graph>& corpus, double time_limit) {
  ScanOptions opts;
  opts.solver.time_limit_seconds = time_limit;
  opts.threads = 1;
  const auto report = conjecture_scan(corpus, 1, opts);
  Table t;
  t.columns = {"index", "n", "m", "max_degree", "bound", "excluded", "status", "value", "violation", "error"};
  for (const auto& e : report.entries) {
    t.rows.push_back({str(e.index), str(e.n), str(e.m), str(e.max_degree), str(e.bound), e.excluded,
                      e.result ? std::string(to_string(e.result->status)) : "", e.result ? str(e.result->value) : "",
                      e.violation ? "1" : "0", e.error});
  }
  return t;
}

Table bench_census_sweep(std::uint64_t seed, std::uint64_t trials) {
  Table t;
  t.columns = {"r", "kind", "trials", "instances", "violations", "frequency", "target_bound", "bound_formula", "note"};
  for (std::uint32_t r : {1u, 2u}) {
    const std::uint64_t cell_seed = derive_seed(seed, "census-sweep", r);
    const auto g = gen_classic(ClassicKind::RandomRegular, 400, 20, derive_seed(cell_seed, "graph"));
    const auto params = lll::make_dense_params(g, r, lll::Epsilon::of(1, 1), cell_seed);
    for (const auto& row : lll::event_census(g, params, trials, cell_seed)) {
      t.rows.push_back({str(r), row.kind, str(row.trials), str(row.instances), str(row.violations),
                        fmt(row.frequency), fmt(row.target_bound), row.bound_formula, lll::kCensusBoundNote});
    }
  }
  return t;
}

Table bench_certificate_sweep() {
  Table t;
  t.columns = {"r", "C", "margin_holds", "margin_value", "threshold_n", "confirmed", "scanned_up_to"};
  constexpr std::uint64_t kMaxN = 2000;
  for (std::uint32_t r = 3; r <= 10; ++r) {
    const auto margin = extremal::asymptotic_margin_check(r);
    for (std::uint64_t c : {0ULL, 300ULL}) {
      const auto search = extremal::find_palette_threshold(r, c, kMaxN);
      t.rows.push_back({str(r), str(c), margin.holds ? "1" : "0", fmt(static_cast<double>(margin.value)),
                        search.threshold ? str(*search.threshold) : "", search.confirmed ? "1" : "0", str(kMaxN)});
    }
  }
  return t;
}

Table run_bench(std::string_view suite, std::uint64_t seed, const std::optional<std::string>& corpus_path,
                double time_limit, std::uint64_t trials) {
  if (suite == "regular-sweep") return bench_regular_sweep(seed);
  if (suite == "conjecture-scan") {
    return bench_conjecture_scan(corpus_path ? read_graph_stream(std::filesystem::path(*corpus_path))
                                             : builtin_small_corpus(),
                                 time_limit);
  }
  if (suite == "census-sweep") return bench_census_sweep(seed, trials);
  if (suite == "certificate-sweep") return bench_certificate_sweep();
  throw Error(ErrorCode::InvalidArgument, "unknown bench suite '" + std::string(suite) + "'");
}

}  // namespace chromadist::harness
