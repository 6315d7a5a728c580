#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "purisim/rational.hpp"

namespace purisim {

// The four BB84 states a sampling qubit can be prepared in. Z0/Z1 span the
// Z basis, XPlus/XMinus the X basis.
enum class BasisState : std::uint8_t { Z0, Z1, XPlus, XMinus };

inline constexpr int kBasisStateCount = 4;

// Per-qubit actions available to the adversary. MeasZ/MeasX are projective
// measurements in the named basis, modeled with Born-rule collapse.
enum class EveAction : std::uint8_t { Identity, PauliX, PauliY, PauliZ, MeasZ, MeasX };

inline constexpr int kEveActionCount = 6;

const char* basis_state_name(BasisState s);
const char* eve_action_name(EveAction a);

// n-qubit Pauli operator in binary symplectic form. Global phase is not
// tracked: syndrome extraction and logical-class membership never need it.
struct PauliString {
  std::vector<std::uint8_t> x_bits;
  std::vector<std::uint8_t> z_bits;

  PauliString() = default;
  explicit PauliString(std::size_t n) : x_bits(n, 0), z_bits(n, 0) {}

  std::size_t n() const { return x_bits.size(); }
  bool is_identity() const;

  // Parses labels like "XZIY" (qubit 0 is the leftmost character).
  static PauliString from_label(const std::string& label);
  std::string label() const;

  // Single-qubit X/Y/Z on `qubit` of an n-qubit identity string.
  static PauliString single(std::size_t n, std::size_t qubit, char pauli);

  bool operator==(const PauliString& other) const = default;
};

// Number of qubits acted on non-trivially.
int weight(const PauliString& p);

// True iff the symplectic inner product of p and q is even.
bool commutes(const PauliString& p, const PauliString& q);

// Phase-free product: XOR of X parts and of Z parts.
PauliString compose(const PauliString& p, const PauliString& q);

// Probability that Bob, re-measuring in the preparation basis, finds the
// state orthogonal to `s` after the action `a`. Exact values in {0, 1/2, 1}.
// Unitary actions follow |<s_perp|U|s>|^2; measurements follow the Born rule
// with post-measurement collapse.
Rational flip_probability(EveAction a, BasisState s);

}  // namespace purisim
