#include "purisim/protocol.hpp"

#include <numeric>
#include <utility>
#include <stdexcept>

#include "purisim/sampling.hpp"

namespace purisim {

namespace {

// Domain-separated RNG derived from the key, so the permutation and the
// sampling-state choices come from independent keyed streams.
Rng key_stream(const SharedKey& key, std::uint32_t domain) {
  std::vector<std::uint32_t> words;
  words.reserve(key.bytes.size() / 4 + 2);
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < key.bytes.size(); ++i) {
    acc |= static_cast<std::uint32_t>(key.bytes[i]) << (8 * (i % 4));
    if (i % 4 == 3) {
      words.push_back(acc);
      acc = 0;
    }
  }
  if (key.bytes.size() % 4 != 0) words.push_back(acc);
  words.push_back(domain);
  std::seed_seq seq(words.begin(), words.end());
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return Rng((static_cast<std::uint64_t>(out[1]) << 32) | out[0]);
}

void check_config(const ProtocolConfig& cfg) {
  if (cfg.message_qubits < 1) throw std::invalid_argument("need at least one message qubit");
  if (cfg.sampling_qubits < 1) throw std::invalid_argument("need at least one sampling qubit");
  if (cfg.distance < 3 || cfg.distance % 2 == 0) {
    throw std::invalid_argument("code distance must be odd, >= 3");
  }
  if (cfg.gate_factor != 2 && cfg.gate_factor != 4) {
    throw std::invalid_argument("gate factor must be 2 or 4");
  }
}

TrialResult aborted_result(AbortReason reason) {
  TrialResult r;
  r.accepted = false;
  r.outcome = TrialOutcome::Aborted;
  r.abort_reason = reason;
  return r;
}

}  // namespace

const char* trial_outcome_name(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::Identity: return "identity";
    case TrialOutcome::LogicalX: return "logical_x";
    case TrialOutcome::LogicalY: return "logical_y";
    case TrialOutcome::LogicalZ: return "logical_z";
    case TrialOutcome::CorrectableSuccess: return "correctable_success";
    case TrialOutcome::UncorrectableFailure: return "uncorrectable_failure";
    case TrialOutcome::Aborted: return "aborted";
  }
  throw std::logic_error("unreachable trial outcome");
}

const char* abort_reason_name(AbortReason r) {
  switch (r) {
    case AbortReason::None: return "none";
    case AbortReason::GateBudget: return "gate_budget";
    case AbortReason::SaturatedMargin: return "saturated_margin";
    case AbortReason::KeyMismatch: return "key_mismatch";
  }
  throw std::logic_error("unreachable abort reason");
}

SharedKey SharedKey::random(Rng& rng) {
  SharedKey key;
  key.bytes.resize(32);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& b : key.bytes) b = static_cast<std::uint8_t>(byte(rng));
  return key;
}

std::vector<std::uint32_t> keyed_permutation(const SharedKey& key, std::int64_t total) {
  if (key.bytes.size() < SharedKey::kMinBytes) {
    throw std::invalid_argument("shared key must be at least 16 bytes");
  }
  if (total < 2) throw std::invalid_argument("permutation needs at least two positions");
  std::vector<std::uint32_t> perm(static_cast<std::size_t>(total));
  std::iota(perm.begin(), perm.end(), 0u);
  Rng rng = key_stream(key, 0x5045524d);  // "PERM"
  for (std::int64_t i = total - 1; i > 0; --i) {
    std::uniform_int_distribution<std::int64_t> pick(0, i);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(rng))]);
  }
  return perm;
}

AliceTransmission alice_prepare(const ProtocolConfig& config, const SharedKey& key) {
  check_config(config);
  AliceTransmission tx;
  tx.permutation = keyed_permutation(key, config.message_qubits + config.sampling_qubits);
  Rng state_rng = key_stream(key, 0x53544154);  // "STAT"
  tx.sampling_states = prepare_sampling_states(config.sampling_qubits, state_rng);
  tx.message.permutation = tx.permutation;
  tx.message.sampling_states = tx.sampling_states;
  tx.message.distance = config.distance;
  tx.message.gate_factor = config.gate_factor;
  return tx;
}

TrialResult bob_process(const ChannelOutcome& outcome, const ClassicalMessage& msg,
                        const SharedKey& key, const ResolvedCode& code,
                        bool strict_margin) {
  const auto n_sampling = static_cast<std::int64_t>(msg.sampling_states.size());
  const auto total = static_cast<std::int64_t>(msg.permutation.size());
  const std::int64_t message_qubits = total - n_sampling;
  if (message_qubits < 1) throw std::invalid_argument("classical message has no message qubits");
  if (static_cast<std::int64_t>(outcome.sampling_flips.size()) != n_sampling ||
      static_cast<std::int64_t>(outcome.message_error.n()) != message_qubits) {
    throw std::invalid_argument("channel outcome dimensions do not match the classical message");
  }
  if (message_qubits != code_qubits(code) &&
      std::holds_alternative<StabilizerCodeDef>(code)) {
    throw std::invalid_argument("concrete code size does not match the message block");
  }

  // Step 4-5: authenticate the classical message by regenerating it from the
  // key. A mismatch models a corrupted or forged classical channel.
  ProtocolConfig echo;
  echo.message_qubits = message_qubits;
  echo.sampling_qubits = n_sampling;
  echo.distance = msg.distance;
  echo.gate_factor = msg.gate_factor;
  bool key_ok = true;
  if (key.bytes.size() < SharedKey::kMinBytes || msg.distance < 3 || msg.distance % 2 == 0 ||
      (msg.gate_factor != 2 && msg.gate_factor != 4)) {
    key_ok = false;
  } else {
    const AliceTransmission expect = alice_prepare(echo, key);
    key_ok = expect.message == msg;
  }

  const std::int64_t true_weight = weight(outcome.message_error);
  std::int64_t true_flip_weight = 0;
  for (auto b : outcome.message_flips) true_flip_weight += b;

  if (!key_ok) {
    TrialResult r = aborted_result(AbortReason::KeyMismatch);
    r.true_weight = true_weight;
    r.true_flip_weight = true_flip_weight;
    return r;
  }

  // Step 5: quantum sampling over the located sampling qubits.
  const Rational omega_hat = relative_hamming_weight(outcome.sampling_flips);
  const SamplingEstimate est = make_sampling_estimate(omega_hat, n_sampling, message_qubits,
                                                      msg.distance, msg.gate_factor);
  const Rational est_gates = estimate_gate_count(message_qubits, omega_hat, msg.gate_factor);
  const Rational delta_exact =
      delta_for_acceptance_exact(message_qubits, omega_hat, msg.distance, msg.gate_factor);

  TrialResult r;
  r.omega_hat = omega_hat;
  r.delta = est.delta;
  r.epsilon_qu = est.epsilon_qu;
  r.est_gates = to_double(est_gates);
  r.true_weight = true_weight;
  r.true_flip_weight = true_flip_weight;

  // Step 6: accept iff the estimated gate count fits the code budget. The
  // strict variant demands positive slack, i.e. decides on omega_hat + delta.
  const bool plain_accept = abstract_accepts(r.est_gates, msg.distance);
  const bool strict_accept = delta_exact > Rational{0};
  r.accepted = strict_margin ? strict_accept : plain_accept;
  if (!r.accepted) {
    r.outcome = TrialOutcome::Aborted;
    r.abort_reason = (strict_margin && plain_accept) ? AbortReason::SaturatedMargin
                                                     : AbortReason::GateBudget;
    return r;
  }

  if (const auto* def = std::get_if<StabilizerCodeDef>(&code)) {
    switch (decode_and_classify(*def, outcome.message_error)) {
      case LogicalEffect::Identity: r.outcome = TrialOutcome::Identity; break;
      case LogicalEffect::LogicalX: r.outcome = TrialOutcome::LogicalX; break;
      case LogicalEffect::LogicalY: r.outcome = TrialOutcome::LogicalY; break;
      case LogicalEffect::LogicalZ: r.outcome = TrialOutcome::LogicalZ; break;
    }
  } else {
    const auto& abs = std::get<AbstractCode>(code);
    r.outcome = true_weight <= abs.correctable() ? TrialOutcome::CorrectableSuccess
                                                 : TrialOutcome::UncorrectableFailure;
  }
  return r;
}

}  // namespace purisim
