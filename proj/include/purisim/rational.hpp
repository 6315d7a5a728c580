#pragma once

#include <boost/rational.hpp>
#include <cstdint>

namespace purisim {

// Exact rational arithmetic for detection probabilities, relative Hamming
// weights, and the enumeration oracle. All quantities that the protocol
// compares against integer thresholds stay rational until the final report.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace purisim
