#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "chromadist/harness/run.hpp"
#include "chromadist/version.hpp"

namespace h = chromadist::harness;

int main(int argc, char** argv) {
  CLI::App app{"chromadist: r-distant set distinguishing edge colourings"};
  app.set_version_flag("--version", std::string(chromadist::kVersion));
  app.require_subcommand(1);

  h::RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string format;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Master seed (else CHROMADIST_SEED, else entropy)");
    sub->add_option("--format", format, "Report format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", cfg.output, "Report file (default: stdout)");
  };
  auto solver = [&](CLI::App* sub) {
    sub->add_option("--kmax", cfg.kmax, "Largest colour count tried");
    sub->add_option("--time", cfg.time_limit, "Time limit in seconds");
    sub->add_option("--edge-order", cfg.edge_order, "degeneracy, input or max-conflict");
    sub->add_flag("!--no-symmetry-break", cfg.symmetry_break, "Disable first-edge symmetry breaking");
  };

  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  common(gen);
  gen->add_option("family", cfg.family,
                  "path, cycle, complete, star, random_regular, path_power, de_bruijn, lower_bound")
      ->required();
  gen->add_option("--n", cfg.n, "Order");
  gen->add_option("--param", cfg.param, "Degree (random_regular) or power (path_power)");
  gen->add_option("--t", cfg.t, "de Bruijn alphabet size");
  gen->add_option("--k", cfg.k, "de Bruijn word length");
  gen->add_option("--r", cfg.r, "lower_bound distance r");
  gen->add_option("--n-scale", cfg.n_scale, "lower_bound scale N");

  auto* colour = app.add_subcommand("colour", "Colour a graph with Delta+1 colours");
  common(colour);
  colour->add_option("graph", cfg.inputs, "Edge list")->required()->expected(1);
  colour->add_option("--method", cfg.method, "vizing")->default_val("vizing");
  colour->add_option("--r", cfg.r, "Distance used for the attached verification");
  colour->add_option("--colouring-out", cfg.colouring_out, "Colouring file");

  auto* solve = app.add_subcommand("solve", "Exact r-distant set distinguishing index");
  common(solve);
  solve->add_option("graph", cfg.inputs, "Edge list")->required()->expected(1);
  solve->add_option("--r", cfg.r, "Distance r");
  solver(solve);
  solve->add_option("--colouring-out,--witness", cfg.colouring_out, "Witness colouring file");

  auto* construct = app.add_subcommand("construct", "Randomised constructions");
  common(construct);
  construct->add_option("graph", cfg.inputs, "Edge list")->required()->expected(1);
  construct->add_option("--method", cfg.method, "dense or asymptotic")
      ->required()
      ->check(CLI::IsMember({"dense", "asymptotic"}));
  construct->add_option("--r", cfg.r, "Distance r");
  construct->add_option("--epsilon", cfg.epsilon, "Epsilon as decimal or p/q (dense)");
  construct->add_option("--max-resamples", cfg.max_resamples, "Resampling budget");
  construct->add_option("--colouring-out", cfg.colouring_out, "Colouring file");

  auto* verify = app.add_subcommand("verify", "Check a colouring");
  common(verify);
  verify->add_option("files", cfg.inputs, "Edge list, then colouring")->required()->expected(2);
  verify->add_option("--r", cfg.r, "Distance r");

  auto* cert = app.add_subcommand("certificate", "Exact-arithmetic certificates");
  common(cert);
  cert->add_option("--kind", cfg.certificate_kind, "palette, threshold, margin, binomial, observation2")
      ->check(CLI::IsMember({"palette", "threshold", "margin", "binomial", "observation2"}));
  cert->add_option("--r", cfg.r, "Distance r");
  cert->add_option("--n-scale", cfg.n_scale, "Scale N");
  cert->add_option("--c", cfg.c, "Additive colour slack C");
  cert->add_option("--sweep-n", cfg.sweep_n, "Sweep N = 1..MAX (palette) or search limit (threshold)");
  cert->add_option("--a", cfg.a, "Binomial a");
  cert->add_option("--b", cfg.b, "Binomial b");
  cert->add_option("--epsilon", cfg.epsilon, "Epsilon (observation2)");

  auto* scan = app.add_subcommand("scan", "Check chi'_{a,r} <= Delta+2 over a graph stream");
  common(scan);
  scan->add_option("corpus", cfg.inputs, "Graph stream")->required()->expected(1);
  scan->add_option("--r", cfg.r, "Distance r");
  scan->add_option("--c", cfg.custom_c, "Compare against Delta+C instead of Delta+2");
  scan->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
  solver(scan);

  auto* census = app.add_subcommand("census", "Empirical bad-event frequencies");
  common(census);
  census->add_option("graph", cfg.inputs, "Edge list")->required()->expected(1);
  census->add_option("--r", cfg.r, "Distance r");
  census->add_option("--epsilon", cfg.epsilon, "Epsilon");
  census->add_option("--trials", cfg.trials, "Trials");
  census->add_option("--threads", cfg.threads, "Worker threads");
  census->add_option("--max-resamples", cfg.max_resamples, "Unused budget echoed into the config");

  auto* bench = app.add_subcommand("bench", "Named experiment suites");
  common(bench);
  bench->add_option("suite", cfg.suite, "regular-sweep, conjecture-scan, census-sweep, certificate-sweep")
      ->required();
  bench->add_option("--corpus", cfg.inputs, "Graph stream for conjecture-scan")->expected(1);
  bench->add_option("--trials", cfg.trials, "Trials per census cell");
  bench->add_option("--time", cfg.time_limit, "Solver time limit per graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version report success; every other parse failure is a usage error.
    const int code = app.exit(e);
    return code == 0 ? h::kExitOk : h::kExitUsage;
  }

  const std::pair<CLI::App*, h::Command> commands[] = {
      {gen, h::Command::Gen},         {colour, h::Command::Colour},     {solve, h::Command::Solve},
      {construct, h::Command::Construct}, {verify, h::Command::Verify}, {cert, h::Command::Certificate},
      {scan, h::Command::Scan},       {census, h::Command::Census},     {bench, h::Command::Bench},
  };
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }

  if (!format.empty()) {
    cfg.format = *h::parse_format(format);
  } else {
    const bool tabular = cfg.command == h::Command::Bench || cfg.command == h::Command::Census ||
                         (cfg.command == h::Command::Certificate && cfg.sweep_n && cfg.certificate_kind == "palette");
    cfg.format = tabular ? h::Format::Csv : h::Format::Json;
  }

  try {
    cfg.seed = h::resolve_seed(seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return h::kExitUsage;
  }
  return h::run(cfg, std::cout, std::cerr);
}
