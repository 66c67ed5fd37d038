#pragma once

// Simplices of a simplicial set in Eilenberg-Zilber normal form.
//
// A simplex is a nondegenerate cell together with a strictly decreasing
// degeneracy word j_1 > j_2 > ... > j_r, read outermost first:
//
//     x = s_{j_1} s_{j_2} ... s_{j_r} (cell)
//
// Internally an m-simplex over a p-cell is handled as the monotone surjection
// eta : [m] -> [p] describing which cell vertex each simplex vertex sits on.
// The word of a normal form is exactly the set {k : eta(k) == eta(k+1)}
// listed in decreasing order, so faces and degeneracies reduce to deleting or
// duplicating one entry of eta.

#include <algorithm>
#include <compare>
#include <concepts>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "ditri/error.hpp"

namespace ditri {

template <class Cell>
struct Simplex {
  Cell cell{};
  int cell_dim = 0;
  std::vector<int> deg_word;

  int dim() const noexcept { return cell_dim + static_cast<int>(deg_word.size()); }
  bool is_degenerate() const noexcept { return !deg_word.empty(); }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

template <class Cell>
Simplex<Cell> nondegenerate(Cell cell, int dim) {
  return Simplex<Cell>{std::move(cell), dim, {}};
}

/// True when `word` is a legal normal-form degeneracy word over a cell of
/// dimension `cell_dim`: strictly decreasing and each index within range for
/// the stage at which it is applied.
inline bool valid_degeneracy_word(int cell_dim, const std::vector<int>& word) {
  const int r = static_cast<int>(word.size());
  for (int k = 0; k < r; ++k) {
    if (word[k] < 0) return false;
    if (k + 1 < r && word[k] <= word[k + 1]) return false;
    // word[k] acts on a simplex of dimension cell_dim + (r - 1 - k).
    if (word[k] > cell_dim + (r - 1 - k)) return false;
  }
  return cell_dim >= 0;
}

/// The vertex surjection [dim] -> [cell_dim] of a normal-form simplex.
template <class Cell>
std::vector<int> surjection(const Simplex<Cell>& x) {
  const int m = x.dim();
  std::vector<bool> repeat(static_cast<std::size_t>(std::max(m, 0)), false);
  for (int j : x.deg_word) repeat[static_cast<std::size_t>(j)] = true;
  std::vector<int> eta(static_cast<std::size_t>(m + 1), 0);
  for (int k = 0; k < m; ++k) eta[k + 1] = eta[k] + (repeat[k] ? 0 : 1);
  return eta;
}

/// Degeneracy word read off a monotone surjection.
inline std::vector<int> word_of_surjection(const std::vector<int>& eta) {
  std::vector<int> word;
  for (int k = static_cast<int>(eta.size()) - 2; k >= 0; --k)
    if (eta[k] == eta[k + 1]) word.push_back(k);
  return word;
}

template <class Cell>
Simplex<Cell> from_surjection(Cell cell, int cell_dim, const std::vector<int>& eta) {
  return Simplex<Cell>{std::move(cell), cell_dim, word_of_surjection(eta)};
}

template <class S>
concept SimplicialSet =
    std::totally_ordered<typename S::cell_type> &&
    requires(const S& s, const typename S::cell_type& c, int i) {
      { s.cell_dim(c) } -> std::convertible_to<int>;
      { s.cell_face(c, i) } -> std::same_as<Simplex<typename S::cell_type>>;
      { s.cell_name(c) } -> std::convertible_to<std::string>;
    };

/// A simplicial set whose nondegenerate cells can be listed degree by degree.
template <class S>
concept EnumerableSimplicialSet = SimplicialSet<S> && requires(const S& s, int k) {
  { s.max_dim() } -> std::convertible_to<int>;
  { s.cells(k) } -> std::ranges::forward_range;
};

template <SimplicialSet S>
using simplex_t = Simplex<typename S::cell_type>;

/// i-th face d_i x, in normal form.
template <SimplicialSet S>
simplex_t<S> face(const S& s, const simplex_t<S>& x, int i) {
  const int m = x.dim();
  if (m < 1) throw IndexOutOfRange("face of a 0-simplex");
  if (i < 0 || i > m)
    throw IndexOutOfRange("face index " + std::to_string(i) + " out of range for a " +
                          std::to_string(m) + "-simplex");
  std::vector<int> eta = surjection(x);
  const int v = eta[i];
  const bool still_onto = (i > 0 && eta[i - 1] == v) || (i < m && eta[i + 1] == v);
  eta.erase(eta.begin() + i);
  if (still_onto) return from_surjection(x.cell, x.cell_dim, eta);

  // Cell vertex v is no longer hit: d_i x = (eta') applied to d_v(cell).
  simplex_t<S> f = s.cell_face(x.cell, v);
  const std::vector<int> kappa = surjection(f);
  for (int& w : eta) w = kappa[static_cast<std::size_t>(w < v ? w : w - 1)];
  return from_surjection(std::move(f.cell), f.cell_dim, eta);
}

/// i-th degeneracy s_i x, in normal form.
template <class Cell>
Simplex<Cell> degeneracy(const Simplex<Cell>& x, int i) {
  const int m = x.dim();
  if (i < 0 || i > m)
    throw IndexOutOfRange("degeneracy index " + std::to_string(i) + " out of range for a " +
                          std::to_string(m) + "-simplex");
  std::vector<int> eta = surjection(x);
  eta.insert(eta.begin() + i, eta[i]);
  return from_surjection(x.cell, x.cell_dim, eta);
}

template <SimplicialSet S>
simplex_t<S> degeneracy(const S&, const simplex_t<S>& x, int i) {
  return degeneracy(x, i);
}

/// One structure map, d_i or s_i.
struct Op {
  enum class Kind { face, degeneracy };
  Kind kind = Kind::face;
  int index = 0;

  friend bool operator==(const Op&, const Op&) = default;
};

inline Op d(int i) { return {Op::Kind::face, i}; }
inline Op s(int i) { return {Op::Kind::degeneracy, i}; }

inline std::string to_string(const Op& op) {
  return (op.kind == Op::Kind::face ? "d" : "s") + std::to_string(op.index);
}

/// Applies `ops` in sequence (first element first) and returns the
/// Eilenberg-Zilber form of the result.
template <SimplicialSet S>
simplex_t<S> apply(const S& s, simplex_t<S> x, const std::vector<Op>& ops) {
  for (const Op& op : ops) {
    if (op.kind == Op::Kind::face) {
      if (x.dim() < 1 || op.index < 0 || op.index > x.dim())
        throw DimensionMismatch("d" + std::to_string(op.index) + " applied to a " +
                                std::to_string(x.dim()) + "-simplex");
      x = face(s, x, op.index);
    } else {
      if (op.index < 0 || op.index > x.dim())
        throw DimensionMismatch("s" + std::to_string(op.index) + " applied to a " +
                                std::to_string(x.dim()) + "-simplex");
      x = degeneracy(x, op.index);
    }
  }
  return x;
}

template <SimplicialSet S>
simplex_t<S> normal_form(const S& s, const typename S::cell_type& cell,
                         const std::vector<Op>& ops) {
  return apply(s, nondegenerate(cell, static_cast<int>(s.cell_dim(cell))), ops);
}

template <SimplicialSet S>
std::string simplex_name(const S& s, const simplex_t<S>& x) {
  std::string out;
  for (int j : x.deg_word) out += "s" + std::to_string(j);
  if (out.empty()) return s.cell_name(x.cell);
  return out + "(" + s.cell_name(x.cell) + ")";
}

/// Every simplex of dimension `dim` over a nondegenerate cell of dimension
/// `cell_dim`, in a fixed order.
template <class Cell>
std::vector<Simplex<Cell>> degeneracies_of(const Cell& cell, int cell_dim, int dim) {
  std::vector<Simplex<Cell>> out;
  const int r = dim - cell_dim;
  if (r < 0) return out;
  // Choose r repeat positions among 0..dim-1.
  std::vector<int> pick(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (k == r) {
      std::vector<int> word(pick.rbegin(), pick.rend());
      out.push_back(Simplex<Cell>{cell, cell_dim, std::move(word)});
      return;
    }
    for (int p = start; p < dim; ++p) {
      pick[static_cast<std::size_t>(k)] = p;
      self(self, p + 1, k + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace ditri
