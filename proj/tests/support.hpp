#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "ditri/ditri.hpp"
#include "oracles/cone_oracle.hpp"

namespace testing_support {

inline oracle::Q to_q(const ditri::Rational& q) { return oracle::Q(ditri::to_string(q)); }

inline oracle::QVector to_q(const ditri::RVector& v) {
  oracle::QVector out;
  for (const auto& q : v) out.push_back(to_q(q));
  return out;
}

// Uniform rational with denominator `den` in the open interval (lo, hi).
inline ditri::Rational open_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> d(lo * den + 1, hi * den - 1);
  return ditri::Rational(d(rng), den);
}

// Coordinates 1 >= t_1 >= ... >= t_m >= 0 with the given denominator.
inline ditri::RVector simplex_coords(std::mt19937_64& rng, int m, long den, bool interior) {
  std::uniform_int_distribution<long> d(interior ? 1 : 0, interior ? den - 1 : den);
  std::vector<long> raw(static_cast<std::size_t>(m));
  for (auto& r : raw) r = d(rng);
  std::sort(raw.begin(), raw.end(), std::greater<>());
  ditri::RVector t;
  for (long r : raw) t.emplace_back(r, den);
  return t;
}

}  // namespace testing_support
