#pragma once

// Integer lattices in row Hermite normal form: basis rows in echelon form,
// positive pivots, entries above each pivot reduced into [0, pivot).

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ditri/rational.hpp"
#include "ditri/xi.hpp"

namespace ditri {

using IntMatrix = std::vector<LatticePoint>;

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice reduction");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice reduction");
  return r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row_a -= f * row_b
inline void axpy(LatticePoint& a, std::int64_t f, const LatticePoint& b) {
  if (f == 0) return;
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = checked_sub(a[k], checked_mul(f, b[k]));
}

}  // namespace detail

/// Row-reduces `rows` to Hermite normal form using only the first
/// `pivot_cols` columns for pivoting; any further columns are carried along.
/// Pivot rows come first, followed by rows that vanish on the pivot columns.
/// Returns the pivot column of each pivot row.
inline std::vector<std::size_t> hermite_reduce(IntMatrix& rows, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_cols && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t p = r; p < rows.size(); ++p)
        if (rows[p][col] != 0 &&
            (best == rows.size() || std::llabs(rows[p][col]) < std::llabs(rows[best][col])))
          best = p;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t q = r + 1; q < rows.size(); ++q) {
        if (rows[q][col] == 0) continue;
        detail::axpy(rows[q], detail::floor_div(rows[q][col], rows[r][col]), rows[r]);
        if (rows[q][col] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows.size() && rows[r][col] != 0) {
      if (rows[r][col] < 0)
        for (auto& x : rows[r]) x = -x;
      for (std::size_t q = 0; q < r; ++q)
        detail::axpy(rows[q], detail::floor_div(rows[q][col], rows[r][col]), rows[r]);
      pivots.push_back(col);
      ++r;
    }
  }
  return pivots;
}

/// A sublattice of Z^n stored by its Hermite normal form basis.
class Lattice {
 public:
  Lattice() = default;

  Lattice(int n, IntMatrix generators) : n_(n) {
    for (const auto& g : generators)
      if (static_cast<int>(g.size()) != n) throw DimensionMismatch("lattice generator of wrong length");
    pivots_ = hermite_reduce(generators, static_cast<std::size_t>(n));
    generators.resize(pivots_.size());
    basis_ = std::move(generators);
  }

  int ambient_dim() const { return n_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  bool full_rank() const { return rank() == n_; }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  /// Index of the lattice in Z^n (product of pivots); only for full rank.
  std::int64_t index() const {
    std::int64_t d = 1;
    for (std::size_t k = 0; k < basis_.size(); ++k) d = detail::checked_mul(d, basis_[k][pivots_[k]]);
    return d;
  }

  /// Representative of v modulo the lattice. For a full-rank lattice the
  /// result lies in the box [0, H_00) x ... x [0, H_{n-1,n-1}).
  LatticePoint reduce(LatticePoint v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k)
      detail::axpy(v, detail::floor_div(v[pivots_[k]], basis_[k][pivots_[k]]), basis_[k]);
    return v;
  }

  bool contains(const LatticePoint& v) const {
    const LatticePoint r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
  }

  /// Calls f(t) for every lattice vector t with lo <= t <= hi. Full rank only.
  void for_each_in_box(const RVector& lo, const RVector& hi,
                       const std::function<void(const LatticePoint&)>& f) const {
    if (!full_rank()) throw NonCocompact("lattice of rank " + std::to_string(rank()) + " in Z^" +
                                         std::to_string(n_) + " has no bounded fundamental domain");
    LatticePoint t(static_cast<std::size_t>(n_), 0);
    // Upper triangular basis: coordinate j depends on coefficients c_0..c_j.
    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == static_cast<std::size_t>(n_)) {
        f(t);
        return;
      }
      const std::int64_t pivot = basis_[j][j];
      const Rational partial(t[j]);
      const auto cmin = static_cast<std::int64_t>(ceil((lo[j] - partial) / pivot));
      const auto cmax = static_cast<std::int64_t>(floor((hi[j] - partial) / pivot));
      for (std::int64_t c = cmin; c <= cmax; ++c) {
        LatticePoint saved = t;
        for (std::size_t k = j; k < t.size(); ++k) t[k] += c * basis_[j][k];
        self(self, j + 1);
        t = std::move(saved);
      }
    };
    rec(rec, 0);
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  int n_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ditri
