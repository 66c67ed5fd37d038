#pragma once

// The directed line Xi_*: vertices are the integers, the nondegenerate edges
// are the pairs (i, i+1), d_1 is the source and d_0 the target.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ditri/rational.hpp"
#include "ditri/simplex.hpp"

namespace ditri {

struct LineCell {
  std::int64_t start = 0;
  int dim = 0;  // 0: vertex `start`, 1: edge (start, start+1)

  friend bool operator==(const LineCell&, const LineCell&) = default;
  friend auto operator<=>(const LineCell&, const LineCell&) = default;
};

inline LineCell line_vertex(std::int64_t i) { return {i, 0}; }
inline LineCell line_edge(std::int64_t i) { return {i, 1}; }

class Line {
 public:
  using cell_type = LineCell;

  int cell_dim(const LineCell& c) const { return c.dim; }

  Simplex<LineCell> cell_face(const LineCell& c, int i) const {
    if (c.dim != 1 || i < 0 || i > 1)
      throw IndexOutOfRange("face d" + std::to_string(i) + " of line cell " + cell_name(c));
    return nondegenerate(line_vertex(i == 0 ? c.start + 1 : c.start), 0);
  }

  std::string cell_name(const LineCell& c) const {
    if (c.dim == 0) return std::to_string(c.start);
    return std::to_string(c.start) + ">" + std::to_string(c.start + 1);
  }

  std::vector<RVector> vertex_positions(const LineCell& c) const {
    std::vector<RVector> out{{Rational(c.start)}};
    if (c.dim == 1) out.push_back({Rational(c.start + 1)});
    return out;
  }

  bool is_locally_finite() const { return true; }
};

/// The finite simplicial subset of Xi_* spanned by the vertices lo..hi.
class LineWindow : public Line {
 public:
  LineWindow(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    if (hi < lo) throw InvalidPresentation("empty line window");
  }

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

  int max_dim() const { return hi_ > lo_ ? 1 : 0; }

  std::vector<LineCell> cells(int k) const {
    std::vector<LineCell> out;
    if (k == 0)
      for (std::int64_t i = lo_; i <= hi_; ++i) out.push_back(line_vertex(i));
    else if (k == 1)
      for (std::int64_t i = lo_; i < hi_; ++i) out.push_back(line_edge(i));
    return out;
  }

 private:
  std::int64_t lo_;
  std::int64_t hi_;
};

}  // namespace ditri
