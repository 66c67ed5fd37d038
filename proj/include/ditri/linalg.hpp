#pragma once

// Exact dense linear algebra over the rationals.

#include <optional>
#include <vector>

#include "ditri/rational.hpp"

namespace ditri {

using RMatrix = std::vector<RVector>;  // row major

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(RMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (q == r || a[q][c] == 0) continue;
      const Rational f = a[q][c];
      for (std::size_t k = 0; k < a[q].size(); ++k) a[q][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RMatrix a) {
  if (a.empty()) return 0;
  return row_reduce(a, a.front().size()).size();
}

/// Some solution x of A x = b, or nullopt when inconsistent.
inline std::optional<RVector> solve(const RMatrix& A, const RVector& b) {
  const std::size_t cols = A.empty() ? 0 : A.front().size();
  RMatrix aug = A;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto piv = row_reduce(aug, cols);
  for (std::size_t i = piv.size(); i < aug.size(); ++i)
    if (aug[i][cols] != 0) return std::nullopt;
  RVector x(cols, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
  return x;
}

/// Whether target is a nonnegative combination of the columns `gens`
/// (each an n-vector). Phase I of the simplex method with Bland's rule.
inline bool in_conic_hull(const std::vector<RVector>& gens, const RVector& target) {
  const std::size_t m = target.size();
  const std::size_t k = gens.size();
  if (m == 0) return true;
  const std::size_t N = k + m;  // structural then artificial columns
  RMatrix t(m, RVector(N + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? Rational(-gens[j][i]) : gens[j][i];
    t[i][k + i] = 1;
    t[i][N] = flip ? Rational(-target[i]) : target[i];
    basis[i] = k + i;
  }
  // Reduced costs of phase I objective sum(artificials).
  RVector z(N + 1, Rational(0));
  for (std::size_t j = 0; j <= N; ++j) {
    Rational col_sum = 0;
    for (std::size_t i = 0; i < m; ++i) col_sum += t[i][j];
    z[j] = (j >= k && j < N ? Rational(1) : Rational(0)) - col_sum;
  }
  for (;;) {
    std::size_t enter = N;
    for (std::size_t j = 0; j < N; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == N) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][N] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen: the phase I objective is bounded below
    const Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= N; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational f = z[enter];
    for (std::size_t j = 0; j <= N; ++j) z[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  // The objective value is -z[N].
  return z[N] == 0;
}

}  // namespace ditri
