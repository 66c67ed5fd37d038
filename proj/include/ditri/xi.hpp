#pragma once

// Xi^n, the n-fold power of the directed line, and its integer windows.
//
// A nondegenerate m-simplex of Xi^n is a chain of lattice points
// v_0 < v_1 < ... < v_m in Z^n in which every coordinate increases at most
// once, by exactly 1. Cells are named by that chain, e.g. "0,0>1,0>1,1".

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ditri/line.hpp"
#include "ditri/product.hpp"

namespace ditri {

using XiCell = std::vector<Simplex<LineCell>>;
using LatticePoint = std::vector<std::int64_t>;

/// Vertices v_0..v_m of a cell of Xi^n.
inline std::vector<LatticePoint> vertex_chain(const XiCell& c) {
  const std::size_t m = c.empty() ? 0 : static_cast<std::size_t>(c.front().dim());
  std::vector<LatticePoint> chain(m + 1, LatticePoint(c.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto eta = surjection(c[k]);
    for (std::size_t v = 0; v <= m; ++v) chain[v][k] = c[k].cell.start + eta[v];
  }
  return chain;
}

/// Inverse of vertex_chain. Throws InvalidPresentation unless `chain` is a
/// nondegenerate simplex of Xi^n.
inline XiCell xi_cell_from_chain(const std::vector<LatticePoint>& chain) {
  if (chain.empty()) throw InvalidPresentation("empty vertex chain");
  const std::size_t n = chain.front().size();
  const std::size_t m = chain.size() - 1;
  for (std::size_t v = 1; v <= m; ++v) {
    if (chain[v].size() != n) throw InvalidPresentation("vertex chain of mixed arity");
    if (chain[v] == chain[v - 1]) throw InvalidPresentation("repeated vertex in chain");
  }
  XiCell cell;
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t base = chain.front()[k];
    std::vector<int> eta(m + 1);
    for (std::size_t v = 0; v <= m; ++v) {
      const std::int64_t step = chain[v][k] - base;
      if (step < 0 || step > 1 || (v > 0 && chain[v][k] < chain[v - 1][k]))
        throw InvalidPresentation("vertex chain is not a simplex of Xi^n");
      eta[v] = static_cast<int>(step);
    }
    const LineCell lc{base, eta.back()};
    cell.push_back(from_surjection(lc, lc.dim, eta));
  }
  return cell;
}

inline std::string xi_cell_name(const XiCell& c) {
  std::string out;
  const auto chain = vertex_chain(c);
  for (std::size_t v = 0; v < chain.size(); ++v) {
    if (v) out += ">";
    for (std::size_t k = 0; k < chain[v].size(); ++k) {
      if (k) out += ",";
      out += std::to_string(chain[v][k]);
    }
  }
  return out;
}

inline XiCell parse_xi_cell(std::string_view text) {
  std::vector<LatticePoint> chain;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('>', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view vertex = text.substr(pos, end - pos);
    LatticePoint p;
    std::size_t q = 0;
    while (q <= vertex.size()) {
      std::size_t comma = vertex.find(',', q);
      if (comma == std::string_view::npos) comma = vertex.size();
      std::string tok(vertex.substr(q, comma - q));
      try {
        std::size_t used = 0;
        p.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("malformed Xi cell '" + std::string(text) + "'", 0);
      }
      q = comma + 1;
    }
    chain.push_back(std::move(p));
    pos = end + 1;
  }
  try {
    return xi_cell_from_chain(chain);
  } catch (const InvalidPresentation& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'", 0);
  }
}

/// Xi^n over a factor model W (Line for the whole space, LineWindow for a
/// finite integer box).
template <class W>
class XiSet : public Power<W> {
 public:
  using Power<W>::Power;
  using cell_type = XiCell;

  std::string cell_name(const XiCell& c) const { return xi_cell_name(c); }
};

using XiPower = XiSet<Line>;
using XiWindow = XiSet<LineWindow>;

inline XiPower xi_power(int n) { return XiPower(Line{}, n); }

/// Cells of Xi^n whose vertices all lie in the box [lo, hi]^n.
inline XiWindow xi_window(int n, std::int64_t lo, std::int64_t hi) {
  return XiWindow(LineWindow(lo, hi), n);
}

inline XiWindow xi_window(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
  if (lo.size() != hi.size()) throw DimensionMismatch("window bounds of different arity");
  std::vector<LineWindow> factors;
  for (std::size_t k = 0; k < lo.size(); ++k) factors.emplace_back(lo[k], hi[k]);
  return XiWindow(std::move(factors));
}

}  // namespace ditri
