#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "purisim/channel.hpp"
#include "purisim/code.hpp"
#include "purisim/pauli.hpp"
#include "purisim/rational.hpp"
#include "purisim/rng.hpp"

namespace purisim {

// Pre-shared secret. Seeds the keyed permutation and the sampling-state
// choices, which stands in for an encrypted, authenticated classical message:
// Bob regenerates the message contents from the key and aborts on mismatch.
struct SharedKey {
  std::vector<std::uint8_t> bytes;

  static constexpr std::size_t kMinBytes = 16;

  static SharedKey random(Rng& rng);

  bool operator==(const SharedKey& other) const = default;
};

struct ProtocolConfig {
  std::int64_t message_qubits = 25;   // M
  std::int64_t sampling_qubits = 20000;  // N
  int distance = 5;                   // d, odd >= 3
  int gate_factor = 2;                // 2 = Pauli-only adversary, 4 = with measurements
  bool strict_margin = false;         // decide on omega_hat + delta instead of omega_hat
};

// Contents of Alice's classical message. Regenerable bit-for-bit from the
// shared key plus the protocol config; never exposed to attack code.
struct ClassicalMessage {
  std::vector<std::uint32_t> permutation;   // canonical index -> channel position
  std::vector<BasisState> sampling_states;  // canonical sampling order
  int distance = 3;
  int gate_factor = 2;

  bool operator==(const ClassicalMessage& other) const = default;
};

enum class TrialOutcome : std::uint8_t {
  Identity,
  LogicalX,
  LogicalY,
  LogicalZ,
  CorrectableSuccess,
  UncorrectableFailure,
  Aborted,
};

enum class AbortReason : std::uint8_t {
  None,
  GateBudget,       // estimated gate count exceeds (d-1)/2
  SaturatedMargin,  // strict_margin on and delta <= 0 while the plain rule accepts
  KeyMismatch,      // classical message does not match the key
};

const char* trial_outcome_name(TrialOutcome o);
const char* abort_reason_name(AbortReason r);

// One protocol execution's transcript. true_weight / true_flip_weight are
// ground truth for analysis only; Bob's decision never reads them.
struct TrialResult {
  std::uint64_t seed = 0;
  Rational omega_hat{0};
  double delta = 0.0;
  double epsilon_qu = 1.0;
  double est_gates = 0.0;
  bool accepted = false;
  std::int64_t true_weight = 0;       // Pauli support weight of the message error
  std::int64_t true_flip_weight = 0;  // counterfactual sampling flips on message qubits
  TrialOutcome outcome = TrialOutcome::Aborted;
  AbortReason abort_reason = AbortReason::None;

  bool operator==(const TrialResult& other) const = default;
};

// Uniform permutation of {0..total-1} derived deterministically from the key.
std::vector<std::uint32_t> keyed_permutation(const SharedKey& key, std::int64_t total);

struct AliceTransmission {
  std::vector<BasisState> sampling_states;  // what goes on the wire
  std::vector<std::uint32_t> permutation;
  ClassicalMessage message;
};

// Protocol steps 1-3: keyed permutation, keyed sampling-state choices, and
// the classical message describing both.
AliceTransmission alice_prepare(const ProtocolConfig& config, const SharedKey& key);

// Protocol steps 4-6: verify the message against the key, estimate the
// relative Hamming weight from the sampling flips, convert it to a gate
// count, and either error-correct or abort.
TrialResult bob_process(const ChannelOutcome& outcome, const ClassicalMessage& msg,
                        const SharedKey& key, const ResolvedCode& code,
                        bool strict_margin = false);

}  // namespace purisim
