#include "chromadist/harness/run.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "chromadist/error.hpp"
#include "chromadist/generators.hpp"
#include "chromadist/harness/bench.hpp"
#include "chromadist/harness/json.hpp"
#include "chromadist/io.hpp"
#include "chromadist/version.hpp"
#include "chromadist/vizing.hpp"

namespace chromadist::harness {

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Gen: return "gen";
    case Command::Colour: return "colour";
    case Command::Solve: return "solve";
    case Command::Construct: return "construct";
    case Command::Verify: return "verify";
    case Command::Certificate: return "certificate";
    case Command::Scan: return "scan";
    case Command::Census: return "census";
    case Command::Bench: return "bench";
  }
  return "unknown";
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "text";
  }
  return "json";
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  return std::nullopt;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CHROMADIST_SEED"); env && *env) {
    std::uint64_t value = 0;
    std::istringstream is(env);
    if (!(is >> value) || !is.eof()) {
      throw Error(ErrorCode::InvalidArgument, std::string("CHROMADIST_SEED is not an unsigned integer: ") + env);
    }
    return value;
  }
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

namespace {

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IsolatedEdge:
    case ErrorCode::DegreeRatioViolated:
    case ErrorCode::MinDegreeTooSmall:
    case ErrorCode::DeltaBelowFloor:
    case ErrorCode::InfeasibleRegular:
    case ErrorCode::BlockTooSmall:
    case ErrorCode::BlockNotDisjoint:
      return kExitGuard;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::SizeCap:
      return kExitBudget;
    default:
      return kExitUsage;
  }
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::string csv_header(const RunConfig& config) {
  return "# tool=chromadist version=" + std::string(kVersion) + " seed=" + std::to_string(config.seed) +
         "\n# config=" + to_json(config).dump() + "\n";
}

void emit_json(const RunConfig& config, const json& result, std::ostream& out) {
  out << envelope(config, result).dump(2) << '\n';
}

void emit_table(const RunConfig& config, const Table& table, std::ostream& out) {
  if (config.format == Format::Json) {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    emit_json(config, {{"columns", table.columns}, {"rows", rows}}, out);
    return;
  }
  out << csv_header(config) << table.to_csv();
}

void require_inputs(const RunConfig& config, std::size_t count) {
  if (config.inputs.size() < count) {
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(config.command)) + " needs " +
                                                std::to_string(count) + " input file(s)");
  }
}

void validate_paths(const RunConfig& config) {
  namespace fs = std::filesystem;
  for (const auto& in : config.inputs) {
    std::ifstream probe(in);
    if (!probe) throw Error(ErrorCode::InvalidArgument, "cannot read input file " + in);
  }
  for (const auto* out : {&config.output, &config.colouring_out}) {
    if (out->empty()) continue;
    const auto parent = fs::path(*out).parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
      throw Error(ErrorCode::InvalidArgument, "output directory does not exist: " + parent.string());
    }
  }
}

void write_colouring_file(const std::string& path, const EdgeColouring& c) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open colouring file " + path);
  write_colouring(f, c);
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  Graph g;
  if (cfg.family == "de_bruijn" || cfg.family == "de-bruijn") {
    g = gen_de_bruijn({cfg.t, cfg.k});
  } else if (cfg.family == "lower_bound" || cfg.family == "lower-bound") {
    g = gen_lower_bound_instance(cfg.r, cfg.n_scale).full;
  } else if (auto kind = parse_classic_kind(cfg.family)) {
    g = gen_classic(*kind, cfg.n, cfg.param, cfg.seed);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown graph family '" + cfg.family + "'");
  }
  write_edge_list(out, g);
  return kExitOk;
}

int cmd_colour(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1);
  if (!cfg.method.empty() && cfg.method != "vizing") {
    throw Error(ErrorCode::InvalidArgument, "colour supports --method vizing only");
  }
  const Graph g = read_edge_list(std::filesystem::path(cfg.inputs[0]));
  const auto c = vizing_colour(g, ColourBlock::range(1, g.max_degree() + 1));
  write_colouring_file(cfg.colouring_out, c);
  const auto check = verify_distinguishing(g, c, cfg.r);
  emit_json(cfg,
            {{"method", "vizing"},
             {"maxDegree", g.max_degree()},
             {"coloursUsed", c.colour_count()},
             {"proper", check.proper},
             {"colouringFile", cfg.colouring_out},
             {"verification", to_json(check)}},
            out);
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1);
  const Graph g = read_edge_list(std::filesystem::path(cfg.inputs[0]));
  SolverConfig sc;
  sc.k_max = cfg.kmax;
  sc.time_limit_seconds = cfg.time_limit;
  sc.symmetry_break = cfg.symmetry_break;
  auto order = parse_edge_order(cfg.edge_order);
  if (!order) throw Error(ErrorCode::InvalidArgument, "unknown edge order '" + cfg.edge_order + "'");
  sc.edge_order = *order;
  const auto res = chi_exact(g, cfg.r, sc);
  json j = to_json(res);
  j["witnessFile"] = nullptr;
  if (res.witness && !cfg.colouring_out.empty()) {
    write_colouring_file(cfg.colouring_out, *res.witness);
    j["witnessFile"] = cfg.colouring_out;
  }
  if (cfg.format == Format::Text) {
    out << "status " << to_string(res.status) << " value " << res.value << '\n';
  } else {
    emit_json(cfg, j, out);
  }
  return res.status == SolverStatus::Exact ? kExitOk : kExitBudget;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1);
  const Graph g = read_edge_list(std::filesystem::path(cfg.inputs[0]));
  json j;
  const EdgeColouring* colouring = nullptr;
  std::optional<lll::DenseResult> dense;
  std::optional<lll::AsymptoticResult> asym;
  if (cfg.method == "dense") {
    dense = lll::construct_dense(g, cfg.r, lll::Epsilon::parse(cfg.epsilon), cfg.seed, cfg.max_resamples);
    j = {{"report", to_json(dense->report)}, {"diagnostics", to_json(dense->diagnostics)}};
    colouring = &dense->colouring;
  } else if (cfg.method == "asymptotic") {
    asym = lll::construct_asymptotic(g, cfg.r, cfg.seed, cfg.max_resamples);
    j = {{"report", to_json(asym->report)}, {"diagnostics", to_json(asym->diagnostics)}};
    colouring = &asym->colouring;
  } else {
    throw Error(ErrorCode::InvalidArgument, "construct needs --method dense or asymptotic");
  }
  write_colouring_file(cfg.colouring_out, *colouring);
  j["colouringFile"] = cfg.colouring_out;
  emit_json(cfg, j, out);
  const auto& report = dense ? dense->report : asym->report;
  return report.final_conflicts == 0 && report.proper ? kExitOk : kExitConflicts;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 2);
  const Graph g = read_edge_list(std::filesystem::path(cfg.inputs[0]));
  const auto c = read_colouring(std::filesystem::path(cfg.inputs[1]), g);
  const auto report = verify_distinguishing(g, c, cfg.r);
  if (cfg.format == Format::Text) {
    out << "proper " << (report.proper ? "yes" : "no") << " conflicts " << report.conflict_count << " colours "
        << report.colours_used << '\n';
  } else {
    emit_json(cfg, to_json(report), out);
  }
  return report.distinguishing() ? kExitOk : kExitConflicts;
}

int cmd_certificate(const RunConfig& cfg, std::ostream& out) {
  const auto& kind = cfg.certificate_kind;
  if (kind == "palette" && cfg.sweep_n) {
    Table t;
    t.columns = {"N", "lhs", "rhs", "verdict"};
    for (std::uint64_t n = 1; n <= *cfg.sweep_n; ++n) {
      const auto cert = extremal::palette_count_certificate(cfg.r, n, cfg.c);
      t.rows.push_back({std::to_string(n), cert.lhs.str(), cert.rhs.str(), cert.verdict ? "1" : "0"});
    }
    emit_table(cfg, t, out);
    return kExitOk;
  }
  json j;
  if (kind == "palette") {
    j = to_json(extremal::palette_count_certificate(cfg.r, cfg.n_scale, cfg.c));
  } else if (kind == "threshold") {
    j = to_json(extremal::find_palette_threshold(cfg.r, cfg.c, cfg.sweep_n.value_or(2000)));
  } else if (kind == "margin") {
    j = to_json(extremal::asymptotic_margin_check(cfg.r));
  } else if (kind == "binomial") {
    j = to_json(extremal::binomial_bounds_check(cfg.a, cfg.b));
  } else if (kind == "observation2") {
    j = to_json(extremal::observation2_check(extremal::parse_rational(cfg.epsilon), cfg.r));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown certificate kind '" + kind + "'");
  }
  emit_json(cfg, j, out);
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1);
  const auto graphs = read_graph_stream(std::filesystem::path(cfg.inputs[0]));
  ScanOptions opts;
  opts.custom_c = cfg.custom_c;
  opts.solver.k_max = cfg.kmax;
  opts.solver.time_limit_seconds = cfg.time_limit;
  opts.solver.symmetry_break = cfg.symmetry_break;
  auto order = parse_edge_order(cfg.edge_order);
  if (!order) throw Error(ErrorCode::InvalidArgument, "unknown edge order '" + cfg.edge_order + "'");
  opts.solver.edge_order = *order;
  opts.threads = cfg.threads;
  const auto report = conjecture_scan(graphs, cfg.r, opts);
  if (cfg.format == Format::Csv) {
    Table t;
    t.columns = {"index", "n", "m", "max_degree", "bound", "excluded", "status", "value", "violation", "error"};
    for (const auto& e : report.entries) {
      t.rows.push_back({std::to_string(e.index), std::to_string(e.n), std::to_string(e.m),
                        std::to_string(e.max_degree), std::to_string(e.bound), e.excluded,
                        e.result ? std::string(to_string(e.result->status)) : "",
                        e.result ? std::to_string(e.result->value) : "", e.violation ? "1" : "0", e.error});
    }
    emit_table(cfg, t, out);
  } else {
    emit_json(cfg, to_json(report), out);
  }
  if (report.violations > 0) return kExitConflicts;
  bool errors = false;
  for (const auto& e : report.entries) errors |= !e.error.empty();
  return report.timeouts > 0 || errors ? kExitBudget : kExitOk;
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1);
  const Graph g = read_edge_list(std::filesystem::path(cfg.inputs[0]));
  const auto params = lll::make_dense_params(g, cfg.r, lll::Epsilon::parse(cfg.epsilon), cfg.seed, cfg.max_resamples);
  const auto rows = lll::event_census(g, params, cfg.trials, cfg.seed, cfg.threads);
  Table t;
  t.columns = {"kind", "trials", "instances", "violations", "frequency", "targetBound", "boundFormula", "note"};
  for (const auto& row : rows) {
    const json j = to_json(row);
    t.rows.push_back({row.kind, std::to_string(row.trials), std::to_string(row.instances),
                      std::to_string(row.violations), j["frequency"].dump(), j["targetBound"].dump(),
                      row.bound_formula, lll::kCensusBoundNote});
  }
  emit_table(cfg, t, out);
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  if (!is_bench_suite(cfg.suite)) {
    throw Error(ErrorCode::InvalidArgument, "unknown bench suite '" + cfg.suite + "'");
  }
  std::optional<std::string> corpus;
  if (!cfg.inputs.empty()) corpus = cfg.inputs[0];
  emit_table(cfg, run_bench(cfg.suite, cfg.seed, corpus, cfg.time_limit, cfg.trials), out);
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_paths(config);
    Sink sink(config.output, out);
    std::ostream& o = sink.stream();
    switch (config.command) {
      case Command::Gen: return cmd_gen(config, o);
      case Command::Colour: return cmd_colour(config, o);
      case Command::Solve: return cmd_solve(config, o);
      case Command::Construct: return cmd_construct(config, o);
      case Command::Verify: return cmd_verify(config, o);
      case Command::Certificate: return cmd_certificate(config, o);
      case Command::Scan: return cmd_scan(config, o);
      case Command::Census: return cmd_census(config, o);
      case Command::Bench: return cmd_bench(config, o);
    }
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace chromadist::harness
