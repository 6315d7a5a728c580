#pragma once

#include <cstdint>
#include <span>

#include "purisim/rational.hpp"

namespace purisim {

// Closed-form sampling failure bounds for a uniformly random k-subset, the
// slack that saturates a distance-d code, and the exact enumeration oracle
// that certifies the closed forms.

// Probability bound that a random-subset estimate misses the true relative
// Hamming weight by at least delta: min(1, 4*exp(-delta^2*k/3)).
double classical_error_bound(double delta, std::int64_t k);
double classical_error_bound_raw(double delta, std::int64_t k);  // unclamped

// Square root of the classical bound: min(1, 2*exp(-delta^2*k/6)).
double quantum_error_bound(double delta, std::int64_t k);
double quantum_error_bound_raw(double delta, std::int64_t k);  // unclamped

// Ones-count over length, exact. Throws std::invalid_argument on an empty
// sequence (no sample was taken).
Rational relative_hamming_weight(std::span<const std::uint8_t> bits);

// Largest slack before the code saturates: (d-1)/(2*gate_factor*M) - omega_hat.
// A negative return means the estimate alone already exceeds the code budget.
double delta_for_acceptance(std::int64_t message_qubits, const Rational& omega_hat,
                            int distance, int gate_factor);
Rational delta_for_acceptance_exact(std::int64_t message_qubits, const Rational& omega_hat,
                                    int distance, int gate_factor);

// Estimated adversarial gate count: gate_factor * M * omega_hat, exact.
Rational estimate_gate_count(std::int64_t message_qubits, const Rational& omega_hat,
                             int gate_factor);

// 1 - quantum_error_bound(delta_for_acceptance(...), k). Throws
// std::invalid_argument when the saturating slack is not positive (the
// protocol must abort in that case).
double success_probability(std::int64_t message_qubits, const Rational& omega_hat,
                           int distance, std::int64_t k, int gate_factor);

// Alternate closed form 1 - 2*exp(-delta^2*k/3), whose exponent is twice the
// one in success_probability. The two do not agree; this one is reported for
// side-by-side comparison only and is never used in decisions.
double success_probability_alt_form(double delta, std::int64_t k);

// Per-trial estimate bundle: everything Bob derives from the sampled flips.
struct SamplingEstimate {
  Rational omega_hat;
  std::int64_t k = 0;             // sampling-qubit count
  std::int64_t message_qubits = 0;
  double delta = 0.0;
  double epsilon_qu = 1.0;        // min(1, 2*exp(-delta^2*k/6)); 1 when delta <= 0
  int gate_factor = 2;
};

SamplingEstimate make_sampling_estimate(const Rational& omega_hat, std::int64_t k,
                                        std::int64_t message_qubits, int distance,
                                        int gate_factor);

// Exact probability, over uniformly random k-subsets t of positions of q,
// that |omega(q_rest) - omega(q_t)| >= delta. Enumerates all C(n,k) subsets;
// throws std::domain_error telling the caller to fall back to Monte Carlo
// when C(n,k) exceeds the guard.
inline constexpr std::uint64_t kSubsetEnumerationGuard = 10'000'000;

Rational exact_classical_failure(std::span<const std::uint8_t> q, int k,
                                 const Rational& delta);

// C(n,k), saturating at 2^64-1 on overflow (callers only compare against the
// enumeration guard).
std::uint64_t subset_count(int n, int k);

}  // namespace purisim
