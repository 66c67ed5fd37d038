#pragma once

// Xi^n as sequences of lattice points v_0 <= ... <= v_m with v_m - v_0 in
// {0,1}^n. Faces delete a vertex, degeneracies repeat one.

#include <cstdint>
#include <vector>

#include "ditri/ditri.hpp"

namespace oracle {

using Vertex = std::vector<std::int64_t>;
using Sequence = std::vector<Vertex>;

inline Sequence face(Sequence s, int i) {
  s.erase(s.begin() + i);
  return s;
}

inline Sequence degeneracy(Sequence s, int i) {
  s.insert(s.begin() + i, s[static_cast<std::size_t>(i)]);
  return s;
}

inline bool is_simplex(const Sequence& s) {
  if (s.empty()) return false;
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    for (std::size_t c = 0; c < s[k].size(); ++c) {
      const auto d = s[k + 1][c] - s[k][c];
      const auto total = s.back()[c] - s.front()[c];
      if (d < 0 || total < 0 || total > 1) return false;
    }
  return true;
}

inline bool is_degenerate(const Sequence& s) {
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    if (s[k] == s[k + 1]) return true;
  return false;
}

// Vertex k of x, obtained by deleting every other vertex with face maps.
inline Vertex vertex(const ditri::XiPower& xi, ditri::Simplex<ditri::XiCell> x, int k) {
  int m = x.dim();
  for (int j = m; j > k; --j) x = ditri::face(xi, x, j);
  for (int j = 0; j < k; ++j) x = ditri::face(xi, x, 0);
  Vertex v;
  for (const auto& c : x.cell) v.push_back(c.cell.start);
  return v;
}

inline Sequence sequence_of(const ditri::XiPower& xi, const ditri::Simplex<ditri::XiCell>& x) {
  if (x.dim() == 0) {
    Vertex v;
    for (const auto& c : x.cell) v.push_back(c.cell.start);
    return {v};
  }
  Sequence s;
  for (int k = 0; k <= x.dim(); ++k) s.push_back(vertex(xi, x, k));
  return s;
}

// Every nondegenerate simplex of Xi^n with vertices in [lo, hi]^n and dimension <= max_dim.
inline std::vector<Sequence> nondegenerate_cells(int n, std::int64_t lo, std::int64_t hi, int max_dim) {
  std::vector<Sequence> out;
  std::vector<Vertex> steps;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Vertex d(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c) d[static_cast<std::size_t>(c)] = (mask >> c) & 1u;
    steps.push_back(d);
  }
  auto extend = [&](auto&& self, Sequence& s) -> void {
    out.push_back(s);
    if (static_cast<int>(s.size()) > max_dim) return;
    for (const auto& d : steps) {
      Vertex v = s.back();
      bool inside = true;
      for (std::size_t c = 0; c < v.size(); ++c) {
        v[c] += d[c];
        inside = inside && v[c] <= hi && v[c] - s.front()[c] <= 1;
      }
      if (!inside) continue;
      s.push_back(v);
      self(self, s);
      s.pop_back();
    }
  };
  Vertex v(static_cast<std::size_t>(n), lo);
  for (;;) {
    Sequence s{v};
    extend(extend, s);
    std::size_t c = 0;
    while (c < v.size() && v[c] == hi) v[c++] = lo;
    if (c == v.size()) break;
    ++v[c];
  }
  return out;
}

}  // namespace oracle
