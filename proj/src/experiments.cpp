#include "purisim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "purisim/rng.hpp"

namespace purisim {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::int64_t parse_int(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const std::int64_t out = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "': not an integer: " + v);
  }
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const std::uint64_t out = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "': not an unsigned integer: " + v);
  }
}

double parse_double(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const double out = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "': not a number: " + v);
  }
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "on" || v == "1") return true;
  if (v == "false" || v == "off" || v == "0") return false;
  throw std::runtime_error("config key '" + key + "': not a boolean: " + v);
}

EveAction parse_action(const std::string& v, const std::string& key) {
  for (int i = 0; i < kEveActionCount; ++i) {
    const auto a = static_cast<EveAction>(i);
    if (v == eve_action_name(a)) return a;
  }
  throw std::runtime_error("config key '" + key + "': unknown action: " + v);
}

}  // namespace

const char* output_format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::JsonLines: return "jsonl";
    case OutputFormat::Text: return "text";
  }
  throw std::logic_error("unreachable output format");
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "jsonl") return OutputFormat::JsonLines;
  if (name == "text") return OutputFormat::Text;
  throw std::runtime_error("unknown output format: " + name + " (expected csv, jsonl, or text)");
}

ExperimentConfig parse_config(std::istream& in, const std::string& origin) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty key or value");
    }
    if (!kv.emplace(key, value).second) {
      throw std::runtime_error(origin + ": duplicate key '" + key + "'");
    }
  }

  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto require = [&](const char* key) {
    auto v = take(key);
    if (!v) throw std::runtime_error(origin + ": missing required key '" + std::string(key) + "'");
    return *v;
  };

  ExperimentConfig cfg;
  cfg.protocol.message_qubits = parse_int(require("message_qubits"), "message_qubits");
  cfg.protocol.sampling_qubits = parse_int(require("sampling_qubits"), "sampling_qubits");
  cfg.protocol.distance = static_cast<int>(parse_int(require("distance"), "distance"));
  if (auto v = take("gate_factor")) {
    cfg.protocol.gate_factor = static_cast<int>(parse_int(*v, "gate_factor"));
  }
  if (auto v = take("strict_margin")) cfg.protocol.strict_margin = parse_bool(*v, "strict_margin");

  std::string code_name = "abstract";
  if (auto v = take("code")) code_name = *v;
  if (code_name != "abstract") {
    CodeId id;
    try {
      id = parse_code_id(code_name);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(origin + ": " + e.what());
    }
    cfg.code_id = id;
    const StabilizerCodeDef def = build_code(id);
    if (cfg.protocol.message_qubits != def.n) {
      throw std::runtime_error(origin + ": code " + code_name + " needs message_qubits = " +
                               std::to_string(def.n));
    }
    if (cfg.protocol.distance != def.distance) {
      throw std::runtime_error(origin + ": code " + code_name + " needs distance = " +
                               std::to_string(def.distance));
    }
  }

  std::string attack_name = "none";
  if (auto v = take("attack")) attack_name = *v;
  if (attack_name == "none") {
    cfg.attack = NoAttack{};
  } else if (attack_name == "iid") {
    IidAttack a;
    if (auto v = take("attack_px")) a.p_x = parse_double(*v, "attack_px");
    if (auto v = take("attack_py")) a.p_y = parse_double(*v, "attack_py");
    if (auto v = take("attack_pz")) a.p_z = parse_double(*v, "attack_pz");
    if (auto v = take("attack_pmeas")) a.p_meas = parse_double(*v, "attack_pmeas");
    cfg.attack = a;
  } else if (attack_name == "fixed_budget") {
    FixedBudgetAttack a;
    a.gates = parse_int(require("attack_gates"), "attack_gates");
    if (auto v = take("attack_action")) a.action = parse_action(*v, "attack_action");
    cfg.attack = a;
    if (auto v = take("attack_placement")) {
      if (*v == "anywhere") cfg.placement = Placement::Anywhere;
      else if (*v == "message_only") cfg.placement = Placement::MessageOnly;
      else throw std::runtime_error(origin + ": unknown attack_placement: " + *v);
    }
    const std::int64_t span = cfg.placement == Placement::MessageOnly
                                  ? cfg.protocol.message_qubits
                                  : cfg.protocol.message_qubits + cfg.protocol.sampling_qubits;
    if (a.gates < 0 || a.gates > span) {
      throw std::runtime_error(origin + ": attack_gates exceeds the targeted positions");
    }
  } else {
    throw std::runtime_error(origin + ": unknown attack: " + attack_name);
  }

  if (auto v = take("trials")) cfg.trials = parse_int(*v, "trials");
  if (auto v = take("seed")) cfg.master_seed = parse_u64(*v, "seed");
  if (auto v = take("out_dir")) cfg.out_dir = *v;
  if (auto v = take("format")) cfg.format = parse_output_format(*v);

  if (!kv.empty()) {
    throw std::runtime_error(origin + ": unknown or inapplicable key '" + kv.begin()->first + "'");
  }
  if (cfg.trials < 1) throw std::runtime_error(origin + ": trials must be >= 1");
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_config(in, path);
}

ResolvedCode resolve_code(const ExperimentConfig& cfg) {
  if (cfg.code_id) return build_code(*cfg.code_id);
  return AbstractCode{cfg.protocol.distance, cfg.protocol.message_qubits};
}

namespace {

// Diagnostic placement: the harness (not attack code) drops the budget on
// message channel positions, using its knowledge of the permutation.
AttackPlan make_message_only_plan(const FixedBudgetAttack& a,
                                  const std::vector<std::uint32_t>& permutation,
                                  std::int64_t message_qubits, Rng& rng) {
  AttackPlan plan;
  plan.actions.assign(permutation.size(), EveAction::Identity);
  std::vector<std::uint32_t> targets(permutation.begin(),
                                     permutation.begin() + message_qubits);
  if (a.gates < 0 || a.gates > static_cast<std::int64_t>(targets.size())) {
    throw std::invalid_argument("fixed budget exceeds the message block");
  }
  for (std::int64_t i = 0; i < a.gates; ++i) {
    std::uniform_int_distribution<std::int64_t> pick(
        i, static_cast<std::int64_t>(targets.size()) - 1);
    std::swap(targets[static_cast<std::size_t>(i)], targets[static_cast<std::size_t>(pick(rng))]);
    plan.actions[targets[static_cast<std::size_t>(i)]] = a.action;
  }
  return plan;
}

}  // namespace

TrialResult run_single_trial(const ExperimentConfig& cfg, const ResolvedCode& code,
                             std::uint64_t trial_index) {
  const std::uint64_t seed = derive_trial_seed(cfg.master_seed, trial_index);
  Rng rng = seeded_rng(seed);
  const SharedKey key = SharedKey::random(rng);
  const AliceTransmission tx = alice_prepare(cfg.protocol, key);
  const std::int64_t total = cfg.protocol.message_qubits + cfg.protocol.sampling_qubits;

  AttackPlan plan;
  if (cfg.placement == Placement::MessageOnly) {
    const auto* fb = std::get_if<FixedBudgetAttack>(&cfg.attack);
    if (!fb) throw std::invalid_argument("message_only placement requires a fixed_budget attack");
    plan = make_message_only_plan(*fb, tx.permutation, cfg.protocol.message_qubits, rng);
  } else {
    plan = make_attack_plan(cfg.attack, total, rng);
  }

  const ChannelOutcome outcome =
      transmit(tx.sampling_states, cfg.protocol.message_qubits, tx.permutation, plan, rng);
  TrialResult r = bob_process(outcome, tx.message, key, code, cfg.protocol.strict_margin);
  r.seed = seed;
  return r;
}

MonteCarloRun run_monte_carlo(const ExperimentConfig& cfg) {
  const ResolvedCode code = resolve_code(cfg);
  MonteCarloRun run;
  run.trials.reserve(static_cast<std::size_t>(cfg.trials));
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    run.trials.push_back(run_single_trial(cfg, code, static_cast<std::uint64_t>(i)));
  }

  AggregateReport& rep = run.report;
  rep.trials = cfg.trials;
  const std::int64_t budget = (cfg.protocol.distance - 1) / 2;
  std::int64_t accepted = 0;
  std::int64_t undetected = 0;
  double omega_sum = 0.0;
  for (const auto& t : run.trials) {
    omega_sum += to_double(t.omega_hat);
    if (t.abort_reason == AbortReason::SaturatedMargin) ++rep.saturated_margin_aborts;
    if (t.abort_reason == AbortReason::KeyMismatch) ++rep.key_mismatch_aborts;
    if (!t.accepted) continue;
    ++accepted;
    rep.bound_epsilon = std::max(rep.bound_epsilon, t.epsilon_qu);
    const bool bad_effect = t.outcome == TrialOutcome::LogicalX ||
                            t.outcome == TrialOutcome::LogicalY ||
                            t.outcome == TrialOutcome::LogicalZ ||
                            t.outcome == TrialOutcome::UncorrectableFailure;
    if (t.true_weight > budget || bad_effect) ++undetected;
  }
  const auto tcount = static_cast<double>(cfg.trials);
  rep.accept_rate = static_cast<double>(accepted) / tcount;
  rep.abort_rate = static_cast<double>(cfg.trials - accepted) / tcount;
  rep.mean_omega_hat = omega_sum / tcount;
  rep.undetected_failure_rate = static_cast<double>(undetected) / tcount;
  if (cfg.trials > 1) {
    double ss = 0.0;
    for (const auto& t : run.trials) {
      const double d = to_double(t.omega_hat) - rep.mean_omega_hat;
      ss += d * d;
    }
    rep.omega_hat_stderr = std::sqrt(ss / (tcount - 1.0)) / std::sqrt(tcount);
  }

  if (!cfg.out_dir.empty()) {
    emit_report(rep, run.trials, cfg.out_dir, cfg.format, &rep);
  }
  return run;
}

std::vector<OracleGridPoint> make_weight_sweep_grid(int max_n) {
  const Rational deltas[] = {{1, 10}, {1, 5}, {3, 10}, {1, 2}};
  std::vector<OracleGridPoint> grid;
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int w = 0; w <= n; ++w) {
        for (const auto& d : deltas) {
          OracleGridPoint p;
          p.n = n;
          p.k = k;
          p.delta = d;
          p.pattern.assign(static_cast<std::size_t>(n), 0);
          std::fill_n(p.pattern.begin(), w, std::uint8_t{1});
          grid.push_back(std::move(p));
        }
      }
    }
  }
  return grid;
}

std::vector<BoundCheckRow> verify_bounds(const std::vector<OracleGridPoint>& grid) {
  std::vector<BoundCheckRow> rows;
  rows.reserve(grid.size());
  for (const auto& point : grid) {
    BoundCheckRow row;
    row.point = point;
    row.bound = classical_error_bound(to_double(point.delta), point.k);
    try {
      row.exact = exact_classical_failure(point.pattern, point.k, point.delta);
      row.status = to_double(row.exact) <= row.bound ? BoundCheckStatus::Pass
                                                     : BoundCheckStatus::Fail;
    } catch (const std::domain_error&) {
      row.status = BoundCheckStatus::Skipped;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace purisim
