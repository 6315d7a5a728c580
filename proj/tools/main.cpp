#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "purisim/experiments.hpp"

namespace {

int run_bounds(double delta, std::int64_t k, std::optional<std::int64_t> m,
               std::optional<int> d, int gate_factor) {
  std::cout << purisim::render_bounds_report(delta, k, m, d, gate_factor);
  return 0;
}

int run_single(const std::string& config_path, std::optional<std::uint64_t> seed) {
  purisim::ExperimentConfig cfg = purisim::parse_config_file(config_path);
  if (seed) cfg.master_seed = *seed;
  const purisim::ResolvedCode code = purisim::resolve_code(cfg);
  const purisim::TrialResult r = purisim::run_single_trial(cfg, code, 0);
  std::cout << purisim::render_trial_transcript(cfg, r);
  return 0;
}

int run_mc(const std::string& config_path, std::optional<std::int64_t> trials,
           std::optional<std::uint64_t> seed, std::optional<std::string> out_dir,
           std::optional<std::string> format) {
  purisim::ExperimentConfig cfg = purisim::parse_config_file(config_path);
  if (trials) cfg.trials = *trials;
  if (seed) cfg.master_seed = *seed;
  if (out_dir) cfg.out_dir = *out_dir;
  if (format) cfg.format = purisim::parse_output_format(*format);
  const purisim::MonteCarloRun run = purisim::run_monte_carlo(cfg);
  std::cout << purisim::render_text_summary(run.report);
  return 0;
}

int run_oracle_verify(int max_n) {
  const auto grid = purisim::make_weight_sweep_grid(max_n);
  const auto rows = purisim::verify_bounds(grid);
  std::cout << purisim::render_bound_check_table(rows);
  for (const auto& row : rows) {
    if (row.status == purisim::BoundCheckStatus::Fail) return 1;
  }
  return 0;
}

int run_decoder_table(const std::string& code_name) {
  const purisim::CodeId id = purisim::parse_code_id(code_name);
  const purisim::StabilizerCodeDef code = purisim::build_code(id);
  std::cout << purisim::render_decoder_table(code);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-way purification protocol simulator and bound checker"};
  app.require_subcommand(1);

  // bounds
  double delta = 0.0;
  std::int64_t k = 0;
  std::optional<std::int64_t> bounds_m;
  std::optional<int> bounds_d;
  int gate_factor = 2;
  auto* bounds = app.add_subcommand("bounds", "closed-form sampling bounds for (delta, k)");
  bounds->add_option("--delta", delta, "sampling slack delta")->required();
  bounds->add_option("--k", k, "number of sampled positions")->required();
  bounds->add_option("--m", bounds_m, "message qubit count (enables code-level output)");
  bounds->add_option("--d", bounds_d, "code distance (odd, >= 3)");
  bounds->add_option("--gate-factor", gate_factor, "gates per unit Hamming weight (2 or 4)")
      ->check(CLI::IsMember({2, 4}));

  // run
  std::string run_config;
  std::optional<std::uint64_t> run_seed;
  auto* run = app.add_subcommand("run", "single protocol trial with a full transcript");
  run->add_option("--config", run_config, "experiment config file")->required();
  run->add_option("--seed", run_seed, "master seed override");

  // mc
  std::string mc_config;
  std::optional<std::int64_t> mc_trials;
  std::optional<std::uint64_t> mc_seed;
  std::optional<std::string> mc_out;
  std::optional<std::string> mc_format;
  auto* mc = app.add_subcommand("mc", "Monte Carlo over independent protocol trials");
  mc->add_option("--config", mc_config, "experiment config file")->required();
  mc->add_option("--trials", mc_trials, "trial count override");
  mc->add_option("--seed", mc_seed, "master seed override");
  mc->add_option("--out", mc_out, "output directory for records and report");
  mc->add_option("--format", mc_format, "csv, jsonl, or text");

  // oracle-verify
  int max_n = 16;
  auto* oracle = app.add_subcommand("oracle-verify",
                                    "exact enumeration oracle vs the closed-form bound");
  oracle->add_option("--max-n", max_n, "largest string length in the sweep")
      ->check(CLI::Range(2, 24));

  // decoder-table
  std::string code_name;
  auto* table = app.add_subcommand("decoder-table", "dump a code's syndrome lookup decoder");
  table->add_option("--code", code_name, "repetition3, five13, or surface3")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds->parsed()) {
      if (bounds_m.has_value() != bounds_d.has_value()) {
        std::cerr << "error: --m and --d must be given together\n";
        return 2;
      }
      return run_bounds(delta, k, bounds_m, bounds_d, gate_factor);
    }
    if (run->parsed()) return run_single(run_config, run_seed);
    if (mc->parsed()) return run_mc(mc_config, mc_trials, mc_seed, mc_out, mc_format);
    if (oracle->parsed()) return run_oracle_verify(max_n);
    if (table->parsed()) return run_decoder_table(code_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
