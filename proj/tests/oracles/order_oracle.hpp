#pragma once

// The coordinatewise order of R^n, read off points given by a vertex chain
// and simplex coordinates 1 >= t_1 >= ... >= t_m >= 0.

#include <vector>

#include "oracles/cone_oracle.hpp"
#include "oracles/xi_model.hpp"

namespace oracle {

// Position sum_j (t_j - t_{j+1}) v_j with t_0 = 1 and t_{m+1} = 0.
inline QVector position(const Sequence& chain, const QVector& t) {
  const std::size_t n = chain.front().size();
  QVector x(n, Q(0));
  for (std::size_t j = 0; j < chain.size(); ++j) {
    const Q hi = j == 0 ? Q(1) : t[j - 1];
    const Q lo = j < t.size() ? t[j] : Q(0);
    for (std::size_t c = 0; c < n; ++c) x[c] += (hi - lo) * Q(chain[j][c]);
  }
  return x;
}

inline bool leq(const QVector& a, const QVector& b) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c] > b[c]) return false;
  return true;
}

}  // namespace oracle
