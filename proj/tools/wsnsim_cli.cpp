// wsnsim: run, compare and brute-force check cluster-head selection protocols.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "wsnsim/config.hpp"
#include "wsnsim/csv_io.hpp"
#include "wsnsim/oracle.hpp"
#include "wsnsim/simulation.hpp"

namespace fs = std::filesystem;
using namespace wsnsim;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string run_file_name(ProtocolKind kind, std::uint64_t seed) {
  return std::string(to_string(kind)) + "_seed" + std::to_string(seed) + ".csv";
}

void write_resolved_config(const fs::path& dir, const ExperimentConfig& config) {
  auto out = open_output(dir / "config.resolved");
  out << dump_config(config);
}

int command_run(ExperimentConfig config, ProtocolKind kind, std::uint64_t seed) {
  config.seeds = {seed};
  config.setup.execution = Execution::parallel;
  const fs::path dir = config.output_dir;
  fs::create_directories(dir);

  const LifetimeSummary summary = run_simulation(config.setup, kind, seed);
  {
    auto out = open_output(dir / run_file_name(kind, seed));
    write_rounds_csv(out, summary);
  }
  if (kind != ProtocolKind::leach) {
    const std::string stem = std::string(to_string(kind)) + "_seed" + std::to_string(seed);
    auto trace = open_output(dir / (stem + "_trace.csv"));
    write_trace_csv(trace, summary);
    auto jumps = open_output(dir / (stem + "_jumps.csv"));
    write_jumps_csv(jumps, summary);
  }
  {
    const RunResult runs[] = {{kind, seed, summary}};
    auto out = open_output(dir / "summary.csv");
    write_summary_csv(out, runs);
  }
  write_resolved_config(dir, config);
  std::cout << to_string(kind) << " seed " << seed << ": fnd=" << summary.fnd << " hnd=" << summary.hnd
            << " lnd=" << summary.lnd << '\n';
  return 0;
}

int command_compare(const ExperimentConfig& config) {
  const fs::path dir = config.output_dir;
  fs::create_directories(dir);
  const Comparison result = compare(config.setup, config.seeds);
  for (const RunResult& run : result.runs) {
    auto out = open_output(dir / run_file_name(run.kind, run.seed));
    write_rounds_csv(out, run.summary);
  }
  {
    auto out = open_output(dir / "summary.csv");
    write_summary_csv(out, result.runs);
  }
  write_resolved_config(dir, config);

  std::cout << config.seeds.size() << " seeds\n";
  std::cout << "protocol  fnd(median/mean)   hnd(median/mean)   lnd(median/mean)\n";
  std::cout << std::fixed << std::setprecision(1);
  for (const ProtocolStats& s : result.stats)
    std::cout << std::left << std::setw(8) << to_string(s.kind) << std::right << std::setw(8) << s.fnd.median
              << " /" << std::setw(7) << s.fnd.mean << std::setw(9) << s.hnd.median << " /" << std::setw(7)
              << s.hnd.mean << std::setw(9) << s.lnd.median << " /" << std::setw(7) << s.lnd.mean << '\n';
  return 0;
}

int command_oracle(ExperimentConfig config, std::size_t nodes, std::size_t clusters, std::uint64_t seed) {
  config.setup.field.node_count = nodes;
  config.setup.field.validate();
  const auto deployment = deploy(config.setup.field, seed);
  const auto candidates = eligible_candidates(deployment, clusters);
  const OracleResult best = exhaustive_best(deployment, candidates, clusters, config.setup.weights);
  std::cout << "nodes=" << nodes << " clusters=" << clusters << " seed=" << seed
            << " subsets=" << best.subsets_evaluated << " best_cost=" << format_double(best.cost) << " heads=";
  for (std::size_t k = 0; k < best.heads.size(); ++k) std::cout << (k ? ";" : "") << best.heads[k].value;
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wireless sensor network lifetime simulator (LEACH / firefly / jumper firefly)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  app.add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory (overrides WSNSIM_OUT and output_dir)");

  auto* run = app.add_subcommand("run", "simulate one protocol on one seed");
  std::string protocol = "jfa";
  std::uint64_t seed = 1;
  run->add_option("--protocol", protocol, "leach, ffa or jfa")->check(CLI::IsMember({"leach", "ffa", "jfa"}));
  run->add_option("--seed", seed, "master seed");

  auto* cmp = app.add_subcommand("compare", "simulate every protocol over a seed list");
  std::string seeds;
  cmp->add_option("--seeds", seeds, "seed list such as 1-20 or 1,5,9 (default from config)");

  auto* oracle = app.add_subcommand("oracle", "exhaustive best clustering cost on a tiny deployment");
  std::size_t oracle_nodes = 6;
  std::size_t oracle_clusters = 2;
  std::uint64_t oracle_seed = 1;
  oracle->add_option("--nodes", oracle_nodes, "node count");
  oracle->add_option("--clusters", oracle_clusters, "cluster heads per solution");
  oracle->add_option("--seed", oracle_seed, "deployment seed");

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig config = config_path.empty() ? parse_config("") : load_config(config_path);
    if (const char* env = std::getenv("WSNSIM_OUT"); env && *env) config.output_dir = env;
    if (!out_dir.empty()) config.output_dir = out_dir;

    if (*run) return command_run(config, parse_protocol(protocol), seed);
    if (*cmp) {
      if (!seeds.empty()) config.seeds = parse_seed_list(seeds);
      return command_compare(config);
    }
    if (*oracle) return command_oracle(config, oracle_nodes, oracle_clusters, oracle_seed);
  } catch (const std::exception& e) {
    std::cerr << "wsnsim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
