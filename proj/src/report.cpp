#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "purisim/experiments.hpp"

namespace purisim {

namespace {

using ordered_json = nlohmann::ordered_json;

// %.17g round-trips doubles exactly, so identical runs serialize identically.
std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string fmt_u64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%" PRIu64, v);
  return buf;
}

const char* format_extension(OutputFormat f) {
  switch (f) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::JsonLines: return "jsonl";
    case OutputFormat::Text: return "txt";
  }
  throw std::logic_error("unreachable output format");
}

ordered_json trial_json(const TrialResult& t) {
  ordered_json j;
  j["seed"] = t.seed;
  j["omega_hat"] = to_double(t.omega_hat);
  j["delta"] = t.delta;
  j["epsilon_qu"] = t.epsilon_qu;
  j["est_gates"] = t.est_gates;
  j["accepted"] = t.accepted;
  j["true_weight"] = t.true_weight;
  j["logical_effect"] = trial_outcome_name(t.outcome);
  j["true_flip_weight"] = t.true_flip_weight;
  return j;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace

std::string format_trial_records(const std::vector<TrialResult>& trials, OutputFormat f) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::Csv:
      out << "seed,omega_hat,delta,epsilon_qu,est_gates,accepted,true_weight,"
             "logical_effect,true_flip_weight\n";
      for (const auto& t : trials) {
        out << fmt_u64(t.seed) << ',' << fmt_full(to_double(t.omega_hat)) << ','
            << fmt_full(t.delta) << ',' << fmt_full(t.epsilon_qu) << ','
            << fmt_full(t.est_gates) << ',' << (t.accepted ? "true" : "false") << ','
            << t.true_weight << ',' << trial_outcome_name(t.outcome) << ','
            << t.true_flip_weight << '\n';
      }
      break;
    case OutputFormat::JsonLines:
      for (const auto& t : trials) out << trial_json(t).dump() << '\n';
      break;
    case OutputFormat::Text:
      for (const auto& t : trials) {
        out << "seed=" << fmt_u64(t.seed) << " omega_hat=" << fmt_full(to_double(t.omega_hat))
            << " delta=" << fmt_full(t.delta) << " epsilon_qu=" << fmt_full(t.epsilon_qu)
            << " est_gates=" << fmt_full(t.est_gates)
            << " accepted=" << (t.accepted ? "true" : "false")
            << " true_weight=" << t.true_weight
            << " logical_effect=" << trial_outcome_name(t.outcome)
            << " true_flip_weight=" << t.true_flip_weight << '\n';
      }
      break;
  }
  return out.str();
}

std::string format_report(const AggregateReport& r, OutputFormat f) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::Csv:
      out << "trials,accept_rate,abort_rate,mean_omega_hat,omega_hat_stderr,"
             "undetected_failure_rate,bound_epsilon,saturated_margin_aborts,"
             "key_mismatch_aborts,records\n";
      out << r.trials << ',' << fmt_full(r.accept_rate) << ',' << fmt_full(r.abort_rate) << ','
          << fmt_full(r.mean_omega_hat) << ',' << fmt_full(r.omega_hat_stderr) << ','
          << fmt_full(r.undetected_failure_rate) << ',' << fmt_full(r.bound_epsilon) << ','
          << r.saturated_margin_aborts << ',' << r.key_mismatch_aborts << ','
          << r.records_path << '\n';
      break;
    case OutputFormat::JsonLines: {
      ordered_json j;
      j["trials"] = r.trials;
      j["accept_rate"] = r.accept_rate;
      j["abort_rate"] = r.abort_rate;
      j["mean_omega_hat"] = r.mean_omega_hat;
      j["omega_hat_stderr"] = r.omega_hat_stderr;
      j["undetected_failure_rate"] = r.undetected_failure_rate;
      j["bound_epsilon"] = r.bound_epsilon;
      j["saturated_margin_aborts"] = r.saturated_margin_aborts;
      j["key_mismatch_aborts"] = r.key_mismatch_aborts;
      j["records"] = r.records_path;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Text:
      out << render_text_summary(r);
      break;
  }
  return out.str();
}

std::string render_text_summary(const AggregateReport& r) {
  std::ostringstream out;
  out << "trials                   = " << r.trials << '\n'
      << "accept rate              = " << fmt_short(r.accept_rate) << '\n'
      << "abort rate               = " << fmt_short(r.abort_rate) << '\n'
      << "mean omega_hat           = " << fmt_short(r.mean_omega_hat) << " +/- "
      << fmt_short(r.omega_hat_stderr) << '\n'
      << "undetected failure rate  = " << fmt_short(r.undetected_failure_rate) << '\n'
      << "epsilon_qu bound         = " << fmt_short(r.bound_epsilon)
      << " (max over accepted trials)\n";
  if (r.saturated_margin_aborts > 0) {
    out << "saturated-margin aborts  = " << r.saturated_margin_aborts << '\n';
  }
  if (r.key_mismatch_aborts > 0) {
    out << "key-mismatch aborts      = " << r.key_mismatch_aborts << '\n';
  }
  if (!r.records_path.empty()) {
    out << "per-trial records        = " << r.records_path << '\n';
  }
  return out.str();
}

void emit_report(const AggregateReport& report, const std::vector<TrialResult>& trials,
                 const std::string& out_dir, OutputFormat f, AggregateReport* updated) {
  std::filesystem::create_directories(out_dir);
  AggregateReport local = report;
  const std::string ext = format_extension(f);
  local.records_path = (std::filesystem::path(out_dir) / ("trials." + ext)).string();
  write_file(local.records_path, format_trial_records(trials, f));
  const std::string report_path = (std::filesystem::path(out_dir) / ("report." + ext)).string();
  write_file(report_path, format_report(local, f));
  if (updated) *updated = local;
}

std::string render_bounds_report(double delta, std::int64_t k,
                                 std::optional<std::int64_t> message_qubits,
                                 std::optional<int> distance, int gate_factor) {
  std::ostringstream out;
  out << "delta                                      = " << fmt_full(delta) << '\n'
      << "k (sampled positions)                      = " << k << '\n'
      << "epsilon_cl = min(1, 4 exp(-delta^2 k / 3)) = "
      << fmt_full(classical_error_bound(delta, k)) << '\n'
      << "epsilon_qu = min(1, 2 exp(-delta^2 k / 6)) = "
      << fmt_full(quantum_error_bound(delta, k)) << '\n';
  if (message_qubits && distance) {
    const std::int64_t m = *message_qubits;
    const int d = *distance;
    const std::int64_t budget = (d - 1) / 2;
    const double omega_sat =
        static_cast<double>(budget) / (static_cast<double>(gate_factor * m)) - delta;
    out << "message qubits M                           = " << m << '\n'
        << "code distance d                            = " << d << '\n'
        << "gate factor                                = " << gate_factor << '\n'
        << "correctable errors (d-1)/2                 = " << budget << '\n'
        << "saturating omega_hat = (d-1)/(2 gf M) - delta = " << fmt_short(omega_sat) << '\n'
        << "success probability  = 1 - 2 exp(-delta^2 k / 6) = "
        << fmt_short(1.0 - quantum_error_bound(delta, k)) << '\n'
        << "alternate closed form = 1 - 2 exp(-delta^2 k / 3) = "
        << fmt_short(success_probability_alt_form(delta, k)) << '\n'
        << "note: the two success figures above use exponents differing by a factor\n"
        << "of two and DO NOT agree; both are printed side by side deliberately.\n"
        << "Decisions use only the delta^2 k / 6 form.\n";
  }
  return out.str();
}

std::string render_bound_check_table(const std::vector<BoundCheckRow>& rows) {
  std::ostringstream out;
  out << "n,k,weight,delta,exact_failure,closed_form_bound,status\n";
  std::int64_t pass = 0, fail = 0, skip = 0;
  for (const auto& row : rows) {
    int w = 0;
    for (auto b : row.point.pattern) w += b;
    const char* status = "skipped";
    if (row.status == BoundCheckStatus::Pass) { status = "pass"; ++pass; }
    else if (row.status == BoundCheckStatus::Fail) { status = "FAIL"; ++fail; }
    else { ++skip; }
    out << row.point.n << ',' << row.point.k << ',' << w << ','
        << row.point.delta.numerator() << '/' << row.point.delta.denominator() << ','
        << row.exact.numerator() << '/' << row.exact.denominator() << ','
        << fmt_full(row.bound) << ',' << status << '\n';
  }
  out << "# pass=" << pass << " fail=" << fail << " skipped=" << skip << '\n';
  return out.str();
}

std::string render_decoder_table(const StabilizerCodeDef& code) {
  std::ostringstream out;
  out << "code " << code.name << ": n=" << code.n << " distance=" << code.distance
      << " stabilizers=" << code.stabilizers.size() << '\n';
  for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
    out << "stabilizer " << i << ": " << code.stabilizers[i].label() << '\n';
  }
  out << "logical_x: " << code.logical_x.label() << '\n';
  out << "logical_z: " << code.logical_z.label() << '\n';
  for (std::uint32_t s = 0; s < code.decoder_table.size(); ++s) {
    std::string bits(code.stabilizers.size(), '0');
    for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
      if (s & (1u << i)) bits[i] = '1';
    }
    const auto& corr = code.decoder_table[s];
    out << "syndrome " << bits << " -> " << corr.label() << " (weight " << weight(corr) << ")\n";
  }
  return out.str();
}

std::string render_trial_transcript(const ExperimentConfig& cfg, const TrialResult& r) {
  std::ostringstream out;
  out << "message qubits M    = " << cfg.protocol.message_qubits << '\n'
      << "sampling qubits N   = " << cfg.protocol.sampling_qubits << '\n'
      << "code distance d     = " << cfg.protocol.distance << '\n'
      << "gate factor         = " << cfg.protocol.gate_factor << '\n'
      << "code model          = " << (cfg.code_id ? build_code(*cfg.code_id).name : "abstract")
      << '\n'
      << "trial seed          = " << fmt_u64(r.seed) << '\n'
      << "omega_hat           = " << r.omega_hat.numerator() << '/' << r.omega_hat.denominator()
      << " = " << fmt_full(to_double(r.omega_hat)) << '\n'
      << "delta (saturating)  = " << fmt_full(r.delta) << '\n'
      << "epsilon_qu          = " << fmt_full(r.epsilon_qu) << '\n'
      << "estimated gates     = " << fmt_full(r.est_gates) << '\n'
      << "decision            = " << (r.accepted ? "accept" : "abort") << '\n';
  if (!r.accepted) {
    out << "abort reason        = " << abort_reason_name(r.abort_reason) << '\n';
  }
  out << "outcome             = " << trial_outcome_name(r.outcome) << '\n'
      << "true message weight = " << r.true_weight << " (ground truth)\n"
      << "true flip weight    = " << r.true_flip_weight << " (ground truth)\n";
  return out.str();
}

}  // namespace purisim
