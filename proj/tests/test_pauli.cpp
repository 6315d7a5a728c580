#include <random>

#include "doctest.h"
#include "purisim/pauli.hpp"
#include "support/born_oracle.hpp"

using namespace purisim;

namespace {

PauliString random_pauli(std::size_t n, std::mt19937_64& rng) {
  PauliString p(n);
  std::uniform_int_distribution<int> bit(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    p.x_bits[i] = static_cast<std::uint8_t>(bit(rng));
    p.z_bits[i] = static_cast<std::uint8_t>(bit(rng));
  }
  return p;
}

constexpr BasisState kStates[] = {BasisState::Z0, BasisState::Z1, BasisState::XPlus,
                                  BasisState::XMinus};
constexpr EveAction kActions[] = {EveAction::Identity, EveAction::PauliX, EveAction::PauliY,
                                  EveAction::PauliZ,   EveAction::MeasZ,  EveAction::MeasX};

}  // namespace

TEST_SUITE_BEGIN("pauli");

TEST_CASE("weight on identity and full support") {
  CHECK(weight(PauliString(5)) == 0);
  CHECK(weight(PauliString::from_label("XYZ")) == 3);
  CHECK(weight(PauliString::single(9, 0, 'X')) == 1);
}

TEST_CASE("label round trip") {
  const std::string label = "IXYZIZYX";
  CHECK(PauliString::from_label(label).label() == label);
  CHECK_THROWS_AS(PauliString::from_label("AB"), std::invalid_argument);
}

TEST_CASE("commutation basics") {
  const auto x = PauliString::from_label("X");
  const auto z = PauliString::from_label("Z");
  CHECK_FALSE(commutes(x, z));
  CHECK(commutes(PauliString::from_label("XX"), PauliString::from_label("ZZ")));
  CHECK(commutes(PauliString(3), PauliString::from_label("XYZ")));
  CHECK_THROWS_AS(commutes(x, PauliString::from_label("XX")), std::invalid_argument);
}

TEST_CASE("compose basics") {
  const auto x = PauliString::from_label("X");
  CHECK(compose(x, x) == PauliString(1));
  CHECK(compose(x, PauliString::from_label("Z")) == PauliString::from_label("Y"));
  const auto p = PauliString::from_label("XYZI");
  CHECK(compose(p, PauliString(4)) == p);
  CHECK_THROWS_AS(compose(x, PauliString(2)), std::invalid_argument);
}

TEST_CASE("compose properties over random strings") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_pauli(8, rng);
    const auto q = random_pauli(8, rng);
    const auto r = random_pauli(8, rng);
    CHECK(weight(compose(p, p)) == 0);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(commutes(p, q) == commutes(q, p));
  }
}

TEST_CASE("flip probability spot values") {
  CHECK(flip_probability(EveAction::PauliX, BasisState::Z0) == Rational{1});
  CHECK(flip_probability(EveAction::PauliX, BasisState::XPlus) == Rational{0});
  CHECK(flip_probability(EveAction::PauliY, BasisState::XMinus) == Rational{1});
  CHECK(flip_probability(EveAction::MeasZ, BasisState::XPlus) == Rational(1, 2));
  CHECK(flip_probability(EveAction::MeasZ, BasisState::Z1) == Rational{0});
}

TEST_CASE("flip probability matches the matrix oracle exactly") {
  for (const auto a : kActions) {
    for (const auto s : kStates) {
      const double expected = testing::oracle_flip_probability(a, s);
      CHECK(to_double(flip_probability(a, s)) == expected);
    }
  }
}

TEST_CASE("state-averaged flip probabilities") {
  const Rational expected[] = {{0, 1}, {1, 2}, {1, 1}, {1, 2}, {1, 4}, {1, 4}};
  for (int ai = 0; ai < kEveActionCount; ++ai) {
    Rational mean{0};
    for (const auto s : kStates) mean += flip_probability(kActions[ai], s);
    mean /= 4;
    CHECK(mean == expected[ai]);
  }
}

TEST_CASE("literal projector channel term averages to 1/8, not 1/4") {
  // Inserting |0><0| directly as the channel operator halves the detection
  // statistic relative to the collapse model; both readings are kept visible.
  double mean = 0.0;
  for (const auto s : kStates) mean += testing::projector_literal_term(s);
  mean /= 4.0;
  CHECK(mean == 0.125);
  double collapse_mean = 0.0;
  for (const auto s : kStates) {
    collapse_mean += to_double(flip_probability(EveAction::MeasZ, s));
  }
  collapse_mean /= 4.0;
  CHECK(collapse_mean == 0.25);
}

TEST_SUITE_END();
