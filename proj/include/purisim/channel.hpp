#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "purisim/pauli.hpp"
#include "purisim/rng.hpp"

namespace purisim {

// Adversary policies. These types deliberately carry only action
// probabilities and counts: the permutation and the prepared sampling states
// are never visible to attack code.
struct NoAttack {};

struct IidAttack {
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;
  double p_meas = 0.0;  // split evenly between MeasZ and MeasX
};

struct FixedBudgetAttack {
  std::int64_t gates = 0;
  EveAction action = EveAction::PauliX;
};

using AttackStrategy = std::variant<NoAttack, IidAttack, FixedBudgetAttack>;

// One action per transmitted position, indexed in channel order.
struct AttackPlan {
  std::vector<EveAction> actions;

  std::size_t size() const { return actions.size(); }
};

// Result of one pass through the channel.
//   sampling_flips[i]  - 1 iff Bob's preparation-basis measurement of
//                        sampling qubit i disagrees with Alice's state.
//   message_error      - effective Pauli applied to the M message qubits.
//   message_flips[j]   - ground-truth diagnostic: the flip message qubit j
//                        would have shown had it been a sampling qubit in a
//                        fresh uniform BB84 state. Never visible to Bob.
struct ChannelOutcome {
  std::vector<std::uint8_t> sampling_flips;
  PauliString message_error;
  std::vector<std::uint8_t> message_flips;

  bool operator==(const ChannelOutcome& other) const = default;
};

// N i.i.d. uniform BB84 states. Throws on N < 1.
std::vector<BasisState> prepare_sampling_states(std::int64_t n, Rng& rng);

// Realizes a strategy as a concrete per-position plan. FixedBudget places
// exactly `gates` actions on distinct uniform positions.
AttackPlan make_attack_plan(const AttackStrategy& strategy, std::int64_t total, Rng& rng);

// Applies the plan to the permuted transmission. Canonical order is message
// qubits [0, M) followed by sampling qubits [M, M+N); permutation[i] is the
// channel position of canonical qubit i. Deterministic given the rng state.
ChannelOutcome transmit(const std::vector<BasisState>& sampling_states,
                        std::int64_t message_qubits,
                        const std::vector<std::uint32_t>& permutation,
                        const AttackPlan& plan, Rng& rng);

}  // namespace purisim
