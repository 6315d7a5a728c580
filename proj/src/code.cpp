#include "purisim/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace purisim {

namespace {

// Symplectic row (x_bits | z_bits) packed into one word; fine for n <= 10.
std::uint32_t pack_symplectic(const PauliString& p) {
  std::uint32_t row = 0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (p.x_bits[i]) row |= 1u << i;
    if (p.z_bits[i]) row |= 1u << (p.n() + i);
  }
  return row;
}

int gf2_rank(std::vector<std::uint32_t> rows) {
  int rank = 0;
  for (int bit = 0; bit < 32; ++bit) {
    const std::uint32_t mask = 1u << bit;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [&](std::uint32_t r) { return r & mask; });
    if (pivot == rows.end()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], *pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) != rank && (rows[i] & mask)) {
        rows[i] ^= rows[static_cast<std::size_t>(rank)];
      }
    }
    ++rank;
  }
  return rank;
}

// Calls `fn` for every Pauli error of the given weight, in lexicographic
// support order with letters ordered X < Y < Z at each position. The
// BitFlipOnly family restricts letters to X.
template <typename Fn>
bool for_each_error_of_weight(int n, int w, ErrorFamily family, Fn&& fn) {
  const char letters_all[] = {'X', 'Y', 'Z'};
  const char letters_x[] = {'X'};
  const char* letters = family == ErrorFamily::BitFlipOnly ? letters_x : letters_all;
  const int letter_count = family == ErrorFamily::BitFlipOnly ? 1 : 3;

  if (w == 0) return fn(PauliString(static_cast<std::size_t>(n)));

  std::vector<int> support(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) support[static_cast<std::size_t>(i)] = i;
  std::vector<int> letter(static_cast<std::size_t>(w), 0);
  while (true) {
    PauliString err(static_cast<std::size_t>(n));
    for (int i = 0; i < w; ++i) {
      const char c = letters[letter[static_cast<std::size_t>(i)]];
      const auto q = static_cast<std::size_t>(support[static_cast<std::size_t>(i)]);
      if (c == 'X' || c == 'Y') err.x_bits[q] = 1;
      if (c == 'Z' || c == 'Y') err.z_bits[q] = 1;
    }
    if (!fn(err)) return false;

    // advance letter odometer (leftmost position most significant)
    int pos = w - 1;
    while (pos >= 0 && letter[static_cast<std::size_t>(pos)] == letter_count - 1) {
      letter[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos >= 0) {
      ++letter[static_cast<std::size_t>(pos)];
      continue;
    }
    // advance support combination
    int j = w - 1;
    while (j >= 0 && support[static_cast<std::size_t>(j)] == n - w + j) --j;
    if (j < 0) return true;
    ++support[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < w; ++i) {
      support[static_cast<std::size_t>(i)] = support[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

bool in_logical_class(const StabilizerCodeDef& code, const PauliString& p) {
  return !commutes(p, code.logical_x) || !commutes(p, code.logical_z);
}

void validate(const StabilizerCodeDef& code) {
  const auto n = static_cast<std::size_t>(code.n);
  if (code.stabilizers.size() != n - 1) {
    throw std::logic_error(code.name + ": expected n-1 stabilizer generators");
  }
  for (const auto& s : code.stabilizers) {
    if (s.n() != n) throw std::logic_error(code.name + ": stabilizer length mismatch");
  }
  for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
    for (std::size_t j = i + 1; j < code.stabilizers.size(); ++j) {
      if (!commutes(code.stabilizers[i], code.stabilizers[j])) {
        throw std::logic_error(code.name + ": stabilizer generators do not commute");
      }
    }
    if (!commutes(code.stabilizers[i], code.logical_x) ||
        !commutes(code.stabilizers[i], code.logical_z)) {
      throw std::logic_error(code.name + ": logical operator anticommutes with a stabilizer");
    }
  }
  if (commutes(code.logical_x, code.logical_z)) {
    throw std::logic_error(code.name + ": logical X and Z must anticommute");
  }
  std::vector<std::uint32_t> rows;
  rows.reserve(code.stabilizers.size());
  for (const auto& s : code.stabilizers) rows.push_back(pack_symplectic(s));
  if (gf2_rank(rows) != static_cast<int>(code.stabilizers.size())) {
    throw std::logic_error(code.name + ": stabilizer generators are not independent");
  }
  // distance: no logical-class representative of weight below the claim
  for (int w = 1; w < code.distance; ++w) {
    const bool clean = for_each_error_of_weight(
        code.n, w, code.family, [&](const PauliString& err) {
          return !(syndrome(code, err) == 0 && in_logical_class(code, err));
        });
    if (!clean) {
      throw std::logic_error(code.name + ": found a logical operator below the claimed distance");
    }
  }
}

StabilizerCodeDef make_repetition_z(int d) {
  if (d < 3 || d % 2 == 0 || d > 9) {
    throw std::invalid_argument("repetition code distance must be odd, 3 <= d <= 9");
  }
  StabilizerCodeDef code;
  code.name = "repetition" + std::to_string(d);
  code.n = d;
  code.distance = d;
  code.family = ErrorFamily::BitFlipOnly;
  for (int i = 0; i + 1 < d; ++i) {
    PauliString s(static_cast<std::size_t>(d));
    s.z_bits[static_cast<std::size_t>(i)] = 1;
    s.z_bits[static_cast<std::size_t>(i + 1)] = 1;
    code.stabilizers.push_back(std::move(s));
  }
  code.logical_x = PauliString::from_label(std::string(static_cast<std::size_t>(d), 'X'));
  code.logical_z = PauliString::single(static_cast<std::size_t>(d), 0, 'Z');
  return code;
}

StabilizerCodeDef make_five_one_three() {
  StabilizerCodeDef code;
  code.name = "five13";
  code.n = 5;
  code.distance = 3;
  code.family = ErrorFamily::AllPauli;
  for (const char* label : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
    code.stabilizers.push_back(PauliString::from_label(label));
  }
  code.logical_x = PauliString::from_label("XXXXX");
  code.logical_z = PauliString::from_label("ZZZZZ");
  return code;
}

// Rotated distance-3 surface code on a 3x3 data-qubit grid (row-major
// indices). Two four-body plaquettes per type in the bulk, two two-body
// checks per type on the boundary.
StabilizerCodeDef make_surface_d3() {
  StabilizerCodeDef code;
  code.name = "surface3";
  code.n = 9;
  code.distance = 3;
  code.family = ErrorFamily::AllPauli;
  for (const char* label : {
           "XXIXXIIII",  // X on {0,1,3,4}
           "IIIIXXIXX",  // X on {4,5,7,8}
           "IIXIIXIII",  // X on {2,5}
           "IIIXIIXII",  // X on {3,6}
           "IZZIZZIII",  // Z on {1,2,4,5}
           "IIIZZIZZI",  // Z on {3,4,6,7}
           "ZZIIIIIII",  // Z on {0,1}
           "IIIIIIIZZ",  // Z on {7,8}
       }) {
    code.stabilizers.push_back(PauliString::from_label(label));
  }
  code.logical_x = PauliString::from_label("XXXIIIIII");  // top row
  code.logical_z = PauliString::from_label("ZIIZIIZII");  // left column
  return code;
}

}  // namespace

const char* logical_effect_name(LogicalEffect e) {
  switch (e) {
    case LogicalEffect::Identity: return "identity";
    case LogicalEffect::LogicalX: return "logical_x";
    case LogicalEffect::LogicalY: return "logical_y";
    case LogicalEffect::LogicalZ: return "logical_z";
  }
  throw std::logic_error("unreachable logical effect");
}

CodeId parse_code_id(const std::string& name) {
  if (name == "repetition3") return CodeId::repetition_z(3);
  if (name == "five13") return CodeId::five_one_three();
  if (name == "surface3") return CodeId::surface_d3();
  throw std::invalid_argument("unknown code id: " + name +
                              " (expected repetition3, five13, or surface3)");
}

int code_distance(const ResolvedCode& code) {
  return std::visit([](const auto& c) { return c.distance; }, code);
}

std::int64_t code_qubits(const ResolvedCode& code) {
  if (const auto* abs = std::get_if<AbstractCode>(&code)) return abs->qubits;
  return std::get<StabilizerCodeDef>(code).n;
}

bool abstract_accepts(double gate_estimate, int distance) {
  if (gate_estimate < 0) throw std::invalid_argument("gate estimate must be non-negative");
  if (distance < 3 || distance % 2 == 0) throw std::invalid_argument("distance must be odd, >= 3");
  return gate_estimate <= (distance - 1) / 2.0;
}

std::uint32_t syndrome(const StabilizerCodeDef& code, const PauliString& error) {
  if (error.n() != static_cast<std::size_t>(code.n)) {
    throw std::invalid_argument("error length does not match the code");
  }
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
    if (!commutes(code.stabilizers[i], error)) bits |= 1u << i;
  }
  return bits;
}

std::vector<PauliString> build_decoder_table(int n,
                                             const std::vector<PauliString>& stabilizers) {
  if (n > 10) throw std::domain_error("decoder table enumeration supports n <= 10 only");
  StabilizerCodeDef probe;  // just enough for syndrome()
  probe.n = n;
  probe.stabilizers = stabilizers;
  const std::size_t table_size = std::size_t{1} << stabilizers.size();
  std::vector<PauliString> table(table_size);
  std::vector<std::uint8_t> filled(table_size, 0);
  std::size_t remaining = table_size;
  for (int w = 0; w <= n && remaining > 0; ++w) {
    for_each_error_of_weight(n, w, ErrorFamily::AllPauli, [&](const PauliString& err) {
      const std::uint32_t s = syndrome(probe, err);
      if (!filled[s]) {
        filled[s] = 1;
        table[s] = err;
        --remaining;
      }
      return remaining > 0;
    });
  }
  if (remaining > 0) {
    throw std::logic_error("decoder table incomplete: some syndromes are unattainable");
  }
  return table;
}

StabilizerCodeDef build_code(const CodeId& id) {
  StabilizerCodeDef code;
  switch (id.kind) {
    case CodeId::Kind::RepetitionZ: code = make_repetition_z(id.repetition_distance); break;
    case CodeId::Kind::FiveOneThree: code = make_five_one_three(); break;
    case CodeId::Kind::SurfaceD3: code = make_surface_d3(); break;
  }
  validate(code);
  code.decoder_table = build_decoder_table(code.n, code.stabilizers);
  for (std::uint32_t s = 0; s < code.decoder_table.size(); ++s) {
    if (syndrome(code, code.decoder_table[s]) != s) {
      throw std::logic_error(code.name + ": decoder entry does not reproduce its syndrome");
    }
  }
  return code;
}

LogicalEffect decode_and_classify(const StabilizerCodeDef& code, const PauliString& error) {
  const std::uint32_t s = syndrome(code, error);
  const PauliString residual = compose(error, code.decoder_table[s]);
  if (syndrome(code, residual) != 0) {
    throw std::logic_error(code.name + ": residual has a nonzero syndrome");
  }
  // residual ~ logical_x^a * logical_z^b * stabilizer, with a/b read off the
  // anticommutation with the opposite logical
  const bool a = !commutes(residual, code.logical_z);
  const bool b = !commutes(residual, code.logical_x);
  if (a && b) return LogicalEffect::LogicalY;
  if (a) return LogicalEffect::LogicalX;
  if (b) return LogicalEffect::LogicalZ;
  return LogicalEffect::Identity;
}

}  // namespace purisim
