#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "purisim/pauli.hpp"

namespace purisim {

// Residual logical action after correction. Identity means the delivered
// logical qubit is unaffected (entanglement with Alice's local qubit is
// preserved under a Pauli channel).
enum class LogicalEffect : std::uint8_t { Identity, LogicalX, LogicalY, LogicalZ };

const char* logical_effect_name(LogicalEffect e);

// Which error family the declared distance is measured against. The Z-type
// repetition code only detects bit flips, so its distance is X-restricted.
enum class ErrorFamily : std::uint8_t { AllPauli, BitFlipOnly };

// Identifier of a concrete code construction.
struct CodeId {
  enum class Kind : std::uint8_t { RepetitionZ, FiveOneThree, SurfaceD3 };
  Kind kind = Kind::FiveOneThree;
  int repetition_distance = 3;  // only used by RepetitionZ

  static CodeId repetition_z(int d) { return {Kind::RepetitionZ, d}; }
  static CodeId five_one_three() { return {Kind::FiveOneThree, 3}; }
  static CodeId surface_d3() { return {Kind::SurfaceD3, 3}; }

  bool operator==(const CodeId& other) const = default;
};

// Parses "repetition3" / "five13" / "surface3". Throws on anything else.
CodeId parse_code_id(const std::string& name);

// One logical qubit stabilizer code with an exhaustively built minimum-weight
// decoder. All invariants (commutation, independence, logical algebra,
// distance, table completeness) are verified during build_code.
struct StabilizerCodeDef {
  std::string name;
  int n = 0;
  std::vector<PauliString> stabilizers;  // n-1 independent commuting generators
  PauliString logical_x;
  PauliString logical_z;
  int distance = 0;
  ErrorFamily family = ErrorFamily::AllPauli;
  // Indexed by packed syndrome (bit i = anticommutes with stabilizers[i]);
  // size 2^(n-1), every entry populated with the minimum-weight correction.
  std::vector<PauliString> decoder_table;

  int correctable() const { return (distance - 1) / 2; }
};

// The distance-only code model: correctability is decided purely by whether
// the true error weight fits the (d-1)/2 budget.
struct AbstractCode {
  int distance = 3;
  std::int64_t qubits = 1;

  std::int64_t correctable() const { return (distance - 1) / 2; }
};

using ResolvedCode = std::variant<AbstractCode, StabilizerCodeDef>;

int code_distance(const ResolvedCode& code);
std::int64_t code_qubits(const ResolvedCode& code);

// Accept rule: the gate-count estimate fits the correction budget (d-1)/2.
bool abstract_accepts(double gate_estimate, int distance);

// Builds and validates a concrete code; throws std::invalid_argument on an
// unknown id and std::logic_error if any construction invariant fails.
StabilizerCodeDef build_code(const CodeId& id);

// Packed syndrome of `error`: bit i set iff it anticommutes with generator i.
std::uint32_t syndrome(const StabilizerCodeDef& code, const PauliString& error);

// Enumerates Pauli errors in ascending weight (supports in lexicographic
// position order, letters ordered X < Y < Z) and keeps the first error seen
// per syndrome. Requires n <= 10.
std::vector<PauliString> build_decoder_table(int n,
                                             const std::vector<PauliString>& stabilizers);

// Looks up the correction, applies it, and classifies the zero-syndrome
// residual by its anticommutation with the logical operators.
LogicalEffect decode_and_classify(const StabilizerCodeDef& code, const PauliString& error);

}  // namespace purisim
