#include "purisim/pauli.hpp"

#include <stdexcept>

namespace purisim {

const char* basis_state_name(BasisState s) {
  switch (s) {
    case BasisState::Z0: return "Z0";
    case BasisState::Z1: return "Z1";
    case BasisState::XPlus: return "X+";
    case BasisState::XMinus: return "X-";
  }
  throw std::logic_error("unreachable basis state");
}

const char* eve_action_name(EveAction a) {
  switch (a) {
    case EveAction::Identity: return "identity";
    case EveAction::PauliX: return "x";
    case EveAction::PauliY: return "y";
    case EveAction::PauliZ: return "z";
    case EveAction::MeasZ: return "meas_z";
    case EveAction::MeasX: return "meas_x";
  }
  throw std::logic_error("unreachable eve action");
}

bool PauliString::is_identity() const {
  for (std::size_t i = 0; i < n(); ++i) {
    if (x_bits[i] || z_bits[i]) return false;
  }
  return true;
}

PauliString PauliString::from_label(const std::string& label) {
  PauliString p(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    switch (label[i]) {
      case 'I': break;
      case 'X': p.x_bits[i] = 1; break;
      case 'Y': p.x_bits[i] = 1; p.z_bits[i] = 1; break;
      case 'Z': p.z_bits[i] = 1; break;
      default: throw std::invalid_argument("invalid Pauli label character");
    }
  }
  return p;
}

std::string PauliString::label() const {
  std::string out(n(), 'I');
  for (std::size_t i = 0; i < n(); ++i) {
    if (x_bits[i] && z_bits[i]) out[i] = 'Y';
    else if (x_bits[i]) out[i] = 'X';
    else if (z_bits[i]) out[i] = 'Z';
  }
  return out;
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, char pauli) {
  if (qubit >= n) throw std::invalid_argument("qubit index out of range");
  PauliString p(n);
  switch (pauli) {
    case 'X': p.x_bits[qubit] = 1; break;
    case 'Y': p.x_bits[qubit] = 1; p.z_bits[qubit] = 1; break;
    case 'Z': p.z_bits[qubit] = 1; break;
    default: throw std::invalid_argument("invalid Pauli letter");
  }
  return p;
}

int weight(const PauliString& p) {
  int w = 0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    w += (p.x_bits[i] | p.z_bits[i]) ? 1 : 0;
  }
  return w;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) throw std::invalid_argument("Pauli length mismatch");
  int acc = 0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    acc ^= (p.x_bits[i] & q.z_bits[i]) ^ (p.z_bits[i] & q.x_bits[i]);
  }
  return acc == 0;
}

PauliString compose(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) throw std::invalid_argument("Pauli length mismatch");
  PauliString out(p.n());
  for (std::size_t i = 0; i < p.n(); ++i) {
    out.x_bits[i] = p.x_bits[i] ^ q.x_bits[i];
    out.z_bits[i] = p.z_bits[i] ^ q.z_bits[i];
  }
  return out;
}

Rational flip_probability(EveAction a, BasisState s) {
  const bool z_basis = (s == BasisState::Z0 || s == BasisState::Z1);
  switch (a) {
    case EveAction::Identity:
      return {0, 1};
    case EveAction::PauliX:
      // flips Z eigenstates, fixes X eigenstates
      return z_basis ? Rational{1, 1} : Rational{0, 1};
    case EveAction::PauliZ:
      return z_basis ? Rational{0, 1} : Rational{1, 1};
    case EveAction::PauliY:
      // anticommutes with both bases: every sampling state flips
      return {1, 1};
    case EveAction::MeasZ:
      // eigenstates are undisturbed; X eigenstates collapse and re-measure
      // to the orthogonal state with probability 1/2
      return z_basis ? Rational{0, 1} : Rational{1, 2};
    case EveAction::MeasX:
      return z_basis ? Rational{1, 2} : Rational{0, 1};
  }
  throw std::logic_error("unreachable eve action");
}

}  // namespace purisim
