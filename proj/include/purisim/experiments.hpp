#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "purisim/channel.hpp"
#include "purisim/code.hpp"
#include "purisim/protocol.hpp"
#include "purisim/sampling.hpp"

namespace purisim {

enum class OutputFormat : std::uint8_t { Csv, JsonLines, Text };

const char* output_format_name(OutputFormat f);
OutputFormat parse_output_format(const std::string& name);

// Where a fixed-budget attack may land. MessageOnly is a diagnostic that
// bypasses the adversary's blindness to the permutation; it is built by the
// harness, not by attack code.
enum class Placement : std::uint8_t { Anywhere, MessageOnly };

struct ExperimentConfig {
  ProtocolConfig protocol;
  std::optional<CodeId> code_id;  // empty = abstract distance model
  AttackStrategy attack = NoAttack{};
  Placement placement = Placement::Anywhere;
  std::int64_t trials = 1;
  std::uint64_t master_seed = 1;
  std::string out_dir;  // empty = no files written
  OutputFormat format = OutputFormat::Csv;
};

// Parses the flat key-value config format (key = value, '#' comments).
// Unknown keys and keys that do not apply to the chosen attack/code are
// errors: the parser fails closed.
ExperimentConfig parse_config(std::istream& in, const std::string& origin);
ExperimentConfig parse_config_file(const std::string& path);

ResolvedCode resolve_code(const ExperimentConfig& cfg);

struct AggregateReport {
  std::int64_t trials = 0;
  double accept_rate = 0.0;
  double abort_rate = 0.0;
  double mean_omega_hat = 0.0;
  double omega_hat_stderr = 0.0;
  // accepted and (true weight beyond the correction budget or a non-identity
  // logical effect).
  double undetected_failure_rate = 0.0;
  // max per-trial epsilon_qu over accepted trials (the weakest guarantee
  // among them); 0 when nothing was accepted.
  double bound_epsilon = 0.0;
  std::int64_t saturated_margin_aborts = 0;
  std::int64_t key_mismatch_aborts = 0;
  std::string records_path;
};

struct MonteCarloRun {
  AggregateReport report;
  std::vector<TrialResult> trials;
};

// Runs one protocol trial with the seed derived from (master_seed, index).
TrialResult run_single_trial(const ExperimentConfig& cfg, const ResolvedCode& code,
                             std::uint64_t trial_index);

// Executes cfg.trials independent trials, aggregates in index order, and, if
// cfg.out_dir is set, writes the per-trial records and the report there.
// Byte-identical outputs for identical (cfg, master_seed).
MonteCarloRun run_monte_carlo(const ExperimentConfig& cfg);

// --- bound-vs-oracle verification -----------------------------------------

struct OracleGridPoint {
  int n = 0;
  int k = 0;
  Rational delta{1, 10};
  std::vector<std::uint8_t> pattern;
};

enum class BoundCheckStatus : std::uint8_t { Pass, Fail, Skipped };

struct BoundCheckRow {
  OracleGridPoint point;
  Rational exact{0};
  double bound = 1.0;
  BoundCheckStatus status = BoundCheckStatus::Skipped;
};

// Grid covering every k in 1..n-1 and every weight 0..n for n in 2..max_n,
// at deltas {1/10, 1/5, 3/10, 1/2}. The failure probability of a fixed
// string under uniform subsets depends only on its weight, so one canonical
// pattern per weight is exhaustive over strings.
std::vector<OracleGridPoint> make_weight_sweep_grid(int max_n);

// Checks exact_classical_failure <= classical_error_bound at every point.
std::vector<BoundCheckRow> verify_bounds(const std::vector<OracleGridPoint>& grid);

// --- report emission --------------------------------------------------------

// Per-trial record fields, in serialization order: seed, omega_hat, delta,
// epsilon_qu, est_gates, accepted, true_weight, logical_effect,
// true_flip_weight.
std::string format_trial_records(const std::vector<TrialResult>& trials, OutputFormat f);
std::string format_report(const AggregateReport& report, OutputFormat f);
std::string render_text_summary(const AggregateReport& report);

// Writes records and report files under out_dir (trials.<ext>, report.<ext>).
void emit_report(const AggregateReport& report, const std::vector<TrialResult>& trials,
                 const std::string& out_dir, OutputFormat f, AggregateReport* updated);

// The `bounds` subcommand body: closed-form bounds for (delta, k) plus, when
// code parameters are given, the saturation point and both success-probability
// closed forms, labeled side by side.
std::string render_bounds_report(double delta, std::int64_t k,
                                 std::optional<std::int64_t> message_qubits,
                                 std::optional<int> distance, int gate_factor);

std::string render_bound_check_table(const std::vector<BoundCheckRow>& rows);
std::string render_decoder_table(const StabilizerCodeDef& code);
std::string render_trial_transcript(const ExperimentConfig& cfg, const TrialResult& r);

}  // namespace purisim
