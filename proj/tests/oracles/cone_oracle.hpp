#pragma once

// Cone membership by Caratheodory: v is a nonnegative combination of the rays
// iff it is one of some linearly independent subset, found by elimination.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using QVector = std::vector<Q>;

inline std::size_t rank(std::vector<QVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Q f = rows[i][c] / rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Coefficients of v in the independent columns `basis`, if v is in their span.
inline std::optional<QVector> coefficients(const std::vector<QVector>& basis, const QVector& v) {
  const std::size_t n = v.size(), k = basis.size();
  std::vector<QVector> m(n, QVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = 0; j <= k; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (m[i][k] != 0) return std::nullopt;
  QVector x(k);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][k] / m[i][pivot_col[i]];
  return x;
}

inline bool in_cone(const std::vector<QVector>& rays, const QVector& v) {
  bool zero = true;
  for (const auto& q : v) zero = zero && q == 0;
  if (zero) return true;
  const std::size_t m = rays.size();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<QVector> pick;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) pick.push_back(rays[i]);
    if (pick.size() > v.size() || rank(pick) != pick.size()) continue;
    auto x = coefficients(pick, v);
    if (!x) continue;
    bool nonneg = true;
    for (const auto& q : *x) nonneg = nonneg && q >= 0;
    if (nonneg) return true;
  }
  return false;
}

// Rays of a pointed cone that are not combinations of the others.
inline std::vector<QVector> extremal(const std::vector<QVector>& rays) {
  std::vector<QVector> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<QVector> rest;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (j != i) rest.push_back(rays[j]);
    if (!in_cone(rest, rays[i])) out.push_back(rays[i]);
  }
  return out;
}

struct Verdict {
  bool generating;
  bool free;
  std::size_t extremal;
};

inline Verdict judge(const std::vector<QVector>& rays, std::size_t n) {
  const auto ext = extremal(rays);
  return {rank(rays) == n, rank(ext) == ext.size(), ext.size()};
}

}  // namespace oracle
