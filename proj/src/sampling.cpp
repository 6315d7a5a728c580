#include "purisim/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace purisim {

namespace {

void require_bound_args(double delta, std::int64_t k) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive (bound is vacuous)");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

// Both closed forms share the delta^2*k product so that the /3 and /6
// exponents differ by an exact binary factor of two; long double keeps the
// sqrt identity between them tight at double precision.
long double exponent_product(double delta, std::int64_t k) {
  return static_cast<long double>(delta) * static_cast<long double>(delta) *
         static_cast<long double>(k);
}

}  // namespace

double classical_error_bound_raw(double delta, std::int64_t k) {
  require_bound_args(delta, k);
  return static_cast<double>(4.0L * std::exp(-exponent_product(delta, k) / 3.0L));
}

double classical_error_bound(double delta, std::int64_t k) {
  return std::min(1.0, classical_error_bound_raw(delta, k));
}

double quantum_error_bound_raw(double delta, std::int64_t k) {
  require_bound_args(delta, k);
  return static_cast<double>(2.0L * std::exp(-exponent_product(delta, k) / 6.0L));
}

double quantum_error_bound(double delta, std::int64_t k) {
  return std::min(1.0, quantum_error_bound_raw(delta, k));
}

Rational relative_hamming_weight(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw std::invalid_argument("no sample was taken: empty bit sequence");
  std::int64_t ones = 0;
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument("bit sequence entries must be 0 or 1");
    ones += b;
  }
  return {ones, static_cast<std::int64_t>(bits.size())};
}

Rational delta_for_acceptance_exact(std::int64_t message_qubits, const Rational& omega_hat,
                                    int distance, int gate_factor) {
  if (message_qubits < 1) throw std::invalid_argument("message qubit count must be >= 1");
  if (distance < 3 || distance % 2 == 0) throw std::invalid_argument("distance must be odd, >= 3");
  if (gate_factor != 2 && gate_factor != 4) throw std::invalid_argument("gate factor must be 2 or 4");
  return Rational{distance - 1, 2 * gate_factor * message_qubits} - omega_hat;
}

double delta_for_acceptance(std::int64_t message_qubits, const Rational& omega_hat,
                            int distance, int gate_factor) {
  return to_double(delta_for_acceptance_exact(message_qubits, omega_hat, distance, gate_factor));
}

Rational estimate_gate_count(std::int64_t message_qubits, const Rational& omega_hat,
                             int gate_factor) {
  if (gate_factor != 2 && gate_factor != 4) throw std::invalid_argument("gate factor must be 2 or 4");
  return Rational{gate_factor * message_qubits, 1} * omega_hat;
}

double success_probability(std::int64_t message_qubits, const Rational& omega_hat,
                           int distance, std::int64_t k, int gate_factor) {
  const Rational delta = delta_for_acceptance_exact(message_qubits, omega_hat, distance, gate_factor);
  if (delta <= Rational{0}) {
    throw std::invalid_argument("code is saturated (delta <= 0): the protocol must abort");
  }
  return 1.0 - quantum_error_bound(to_double(delta), k);
}

double success_probability_alt_form(double delta, std::int64_t k) {
  require_bound_args(delta, k);
  return 1.0 - std::min(1.0, static_cast<double>(
                                 2.0L * std::exp(-exponent_product(delta, k) / 3.0L)));
}

SamplingEstimate make_sampling_estimate(const Rational& omega_hat, std::int64_t k,
                                        std::int64_t message_qubits, int distance,
                                        int gate_factor) {
  SamplingEstimate est;
  est.omega_hat = omega_hat;
  est.k = k;
  est.message_qubits = message_qubits;
  est.gate_factor = gate_factor;
  est.delta = delta_for_acceptance(message_qubits, omega_hat, distance, gate_factor);
  est.epsilon_qu = est.delta > 0.0 ? quantum_error_bound(est.delta, k) : 1.0;
  return est;
}

std::uint64_t subset_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) {
    // c * (n - i) / (i + 1); every prefix is itself a binomial, so the
    // division is exact. Detect overflow before multiplying.
    const auto factor = static_cast<std::uint64_t>(n - i);
    if (c > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    c = c * factor / static_cast<std::uint64_t>(i + 1);
  }
  return c;
}

Rational exact_classical_failure(std::span<const std::uint8_t> q, int k,
                                 const Rational& delta) {
  const int n = static_cast<int>(q.size());
  if (n < 2 || k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n and n >= 2");
  if (n > 62) throw std::domain_error("n too large to enumerate; use a Monte Carlo estimate");
  if (delta <= Rational{0}) throw std::invalid_argument("delta must be positive");
  const std::uint64_t total = subset_count(n, k);
  if (total > kSubsetEnumerationGuard) {
    throw std::domain_error("C(n,k) exceeds the enumeration guard (" +
                            std::to_string(kSubsetEnumerationGuard) +
                            "); use a Monte Carlo estimate instead");
  }

  std::uint64_t pattern = 0;
  int total_weight = 0;
  for (int i = 0; i < n; ++i) {
    if (q[i] > 1) throw std::invalid_argument("bit sequence entries must be 0 or 1");
    if (q[i]) {
      pattern |= std::uint64_t{1} << i;
      ++total_weight;
    }
  }

  // |wt_rest/(n-k) - wt_t/k| >= delta, cross-multiplied into exact integers:
  // den * |wt_rest*k - wt_t*(n-k)| >= num * k * (n-k).
  const std::int64_t num = delta.numerator();
  const std::int64_t den = delta.denominator();
  const std::int64_t rhs = num * static_cast<std::int64_t>(k) * static_cast<std::int64_t>(n - k);

  std::uint64_t failures = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t subset = (std::uint64_t{1} << k) - 1;
  while (subset < limit) {
    const std::int64_t wt_t = std::popcount(pattern & subset);
    const std::int64_t wt_rest = total_weight - wt_t;
    const std::int64_t diff = wt_rest * k - wt_t * static_cast<std::int64_t>(n - k);
    if (den * std::llabs(diff) >= rhs) ++failures;
    // Gosper's hack: next subset of the same cardinality.
    const std::uint64_t t = subset | (subset - 1);
    subset = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(subset) + 1));
  }
  return {static_cast<std::int64_t>(failures), static_cast<std::int64_t>(total)};
}

}  // namespace purisim
