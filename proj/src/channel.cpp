#include "purisim/channel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace purisim {

namespace {

struct PlanBuilder {
  std::int64_t total;
  Rng& rng;

  AttackPlan operator()(const NoAttack&) const {
    AttackPlan plan;
    plan.actions.assign(static_cast<std::size_t>(total), EveAction::Identity);
    return plan;
  }

  AttackPlan operator()(const IidAttack& a) const {
    if (a.p_x < 0 || a.p_y < 0 || a.p_z < 0 || a.p_meas < 0 ||
        a.p_x + a.p_y + a.p_z + a.p_meas > 1.0 + 1e-12) {
      throw std::invalid_argument("iid attack probabilities must be >= 0 and sum to <= 1");
    }
    AttackPlan plan;
    plan.actions.reserve(static_cast<std::size_t>(total));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::int64_t i = 0; i < total; ++i) {
      const double u = unit(rng);
      EveAction act = EveAction::Identity;
      double c = a.p_x;
      if (u < c) act = EveAction::PauliX;
      else if (u < (c += a.p_y)) act = EveAction::PauliY;
      else if (u < (c += a.p_z)) act = EveAction::PauliZ;
      else if (u < (c += a.p_meas / 2)) act = EveAction::MeasZ;
      else if (u < (c += a.p_meas / 2)) act = EveAction::MeasX;
      plan.actions.push_back(act);
    }
    return plan;
  }

  AttackPlan operator()(const FixedBudgetAttack& a) const {
    if (a.gates < 0 || a.gates > total) {
      throw std::invalid_argument("fixed budget exceeds the number of transmitted qubits");
    }
    AttackPlan plan;
    plan.actions.assign(static_cast<std::size_t>(total), EveAction::Identity);
    // partial Fisher-Yates: the first `gates` entries are a uniform sample
    // without replacement
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(total));
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::int64_t i = 0; i < a.gates; ++i) {
      std::uniform_int_distribution<std::int64_t> pick(i, total - 1);
      std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(pick(rng))]);
      plan.actions[idx[static_cast<std::size_t>(i)]] = a.action;
    }
    return plan;
  }
};

}  // namespace

std::vector<BasisState> prepare_sampling_states(std::int64_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("need at least one sampling qubit");
  std::vector<BasisState> states;
  states.reserve(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> pick(0, kBasisStateCount - 1);
  for (std::int64_t i = 0; i < n; ++i) {
    states.push_back(static_cast<BasisState>(pick(rng)));
  }
  return states;
}

AttackPlan make_attack_plan(const AttackStrategy& strategy, std::int64_t total, Rng& rng) {
  if (total < 1) throw std::invalid_argument("need at least one transmitted qubit");
  return std::visit(PlanBuilder{total, rng}, strategy);
}

ChannelOutcome transmit(const std::vector<BasisState>& sampling_states,
                        std::int64_t message_qubits,
                        const std::vector<std::uint32_t>& permutation,
                        const AttackPlan& plan, Rng& rng) {
  const std::int64_t n_sampling = static_cast<std::int64_t>(sampling_states.size());
  const std::int64_t total = n_sampling + message_qubits;
  if (message_qubits < 0) throw std::invalid_argument("negative message qubit count");
  if (static_cast<std::int64_t>(plan.size()) != total) {
    throw std::invalid_argument("attack plan length must equal the transmitted qubit count");
  }
  if (static_cast<std::int64_t>(permutation.size()) != total) {
    throw std::invalid_argument("permutation length must equal the transmitted qubit count");
  }
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(total), 0);
  for (auto p : permutation) {
    if (p >= permutation.size() || seen[p]) {
      throw std::invalid_argument("permutation is not a bijection");
    }
    seen[p] = 1;
  }

  ChannelOutcome out;
  out.sampling_flips.resize(static_cast<std::size_t>(n_sampling), 0);
  out.message_error = PauliString(static_cast<std::size_t>(message_qubits));
  out.message_flips.resize(static_cast<std::size_t>(message_qubits), 0);

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick_state(0, kBasisStateCount - 1);

  // Canonical order: message qubits [0, M), sampling qubits [M, M+N).
  for (std::int64_t i = 0; i < n_sampling; ++i) {
    const auto pos = permutation[static_cast<std::size_t>(message_qubits + i)];
    const EveAction act = plan.actions[pos];
    const Rational p = flip_probability(act, sampling_states[static_cast<std::size_t>(i)]);
    out.sampling_flips[static_cast<std::size_t>(i)] = unit(rng) < to_double(p) ? 1 : 0;
  }
  for (std::int64_t j = 0; j < message_qubits; ++j) {
    const auto pos = permutation[static_cast<std::size_t>(j)];
    const EveAction act = plan.actions[pos];
    const auto jj = static_cast<std::size_t>(j);
    switch (act) {
      case EveAction::Identity:
        break;
      case EveAction::PauliX:
        out.message_error.x_bits[jj] = 1;
        break;
      case EveAction::PauliY:
        out.message_error.x_bits[jj] = 1;
        out.message_error.z_bits[jj] = 1;
        break;
      case EveAction::PauliZ:
        out.message_error.z_bits[jj] = 1;
        break;
      case EveAction::MeasZ:
        // induced dephasing channel: Z with probability 1/2
        out.message_error.z_bits[jj] = unit(rng) < 0.5 ? 1 : 0;
        break;
      case EveAction::MeasX:
        out.message_error.x_bits[jj] = unit(rng) < 0.5 ? 1 : 0;
        break;
    }
    // Counterfactual flip this position would have shown as a sampling qubit
    // in a fresh uniform BB84 state. Ground truth only; Bob never sees it.
    const auto state = static_cast<BasisState>(pick_state(rng));
    const Rational p = flip_probability(act, state);
    out.message_flips[jj] = unit(rng) < to_double(p) ? 1 : 0;
  }
  return out;
}

}  // namespace purisim
