#pragma once

// Degreewise products. A nondegenerate m-simplex of A x B is a pair
// (s_I a, s_J b) of m-simplices whose degeneracy index sets are disjoint;
// any other pair is s_K of such a pair with K = I n J.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ditri/rational.hpp"
#include "ditri/simplex.hpp"

namespace ditri {

namespace detail {

// Removes the positions shared by every surjection's repeat set. Returns the
// shared positions in decreasing order (a normal-form degeneracy word).
inline std::vector<int> factor_common_degeneracies(std::vector<std::vector<int>*> etas) {
  if (etas.empty()) return {};
  const int m = static_cast<int>(etas.front()->size()) - 1;
  std::vector<int> common;
  for (int k = m - 1; k >= 0; --k) {
    bool shared = true;
    for (const auto* eta : etas)
      if ((*eta)[k] != (*eta)[k + 1]) shared = false;
    if (shared) common.push_back(k);
  }
  // Erase duplicated entries from the highest position down.
  for (int k : common)
    for (auto* eta : etas) eta->erase(eta->begin() + k + 1);
  return common;
}

}  // namespace detail

template <class CA, class CB>
struct ProductCell {
  Simplex<CA> first;
  Simplex<CB> second;

  friend bool operator==(const ProductCell&, const ProductCell&) = default;
  friend auto operator<=>(const ProductCell&, const ProductCell&) = default;
};

/// A x B with componentwise structure maps.
template <SimplicialSet A, SimplicialSet B>
class Product {
 public:
  using first_cell = typename A::cell_type;
  using second_cell = typename B::cell_type;
  using cell_type = ProductCell<first_cell, second_cell>;

  Product(A a, B b) : a_(std::move(a)), b_(std::move(b)) {}

  const A& first() const { return a_; }
  const B& second() const { return b_; }

  /// The normal form of the pair (x, y).
  Simplex<cell_type> pair(const Simplex<first_cell>& x, const Simplex<second_cell>& y) const {
    if (x.dim() != y.dim())
      throw DimensionMismatch("product pair of a " + std::to_string(x.dim()) + "-simplex and a " +
                              std::to_string(y.dim()) + "-simplex");
    std::vector<int> ex = surjection(x);
    std::vector<int> ey = surjection(y);
    std::vector<int> common = detail::factor_common_degeneracies({&ex, &ey});
    cell_type c{from_surjection(x.cell, x.cell_dim, ex), from_surjection(y.cell, y.cell_dim, ey)};
    const int dim = c.first.dim();
    return Simplex<cell_type>{std::move(c), dim, std::move(common)};
  }

  Simplex<first_cell> project_first(const Simplex<cell_type>& z) const {
    return reapply(z.cell.first, z.deg_word);
  }
  Simplex<second_cell> project_second(const Simplex<cell_type>& z) const {
    return reapply(z.cell.second, z.deg_word);
  }

  int cell_dim(const cell_type& c) const { return c.first.dim(); }

  Simplex<cell_type> cell_face(const cell_type& c, int i) const {
    return pair(face(a_, c.first, i), face(b_, c.second, i));
  }

  std::string cell_name(const cell_type& c) const {
    return "(" + simplex_name(a_, c.first) + ";" + simplex_name(b_, c.second) + ")";
  }

  bool is_locally_finite() const
    requires requires(const A& a, const B& b) { a.is_locally_finite(); b.is_locally_finite(); }
  {
    return a_.is_locally_finite() && b_.is_locally_finite();
  }

  int max_dim() const
    requires EnumerableSimplicialSet<A> && EnumerableSimplicialSet<B>
  {
    if (a_.max_dim() < 0 || b_.max_dim() < 0) return -1;
    return a_.max_dim() + b_.max_dim();
  }

  std::vector<cell_type> cells(int m) const
    requires EnumerableSimplicialSet<A> && EnumerableSimplicialSet<B>
  {
    std::vector<cell_type> out;
    for (int p = 0; p <= std::min(m, a_.max_dim()); ++p) {
      for (int q = std::max(0, m - p); q <= std::min(m, b_.max_dim()); ++q) {
        for (const auto& a : a_.cells(p)) {
          const auto xs = degeneracies_of(first_cell(a), p, m);
          for (const auto& b : b_.cells(q)) {
            const auto ys = degeneracies_of(second_cell(b), q, m);
            for (const auto& x : xs)
              for (const auto& y : ys)
                if (disjoint(x.deg_word, y.deg_word)) out.push_back(cell_type{x, y});
          }
        }
      }
    }
    return out;
  }

  std::vector<RVector> vertex_positions(const cell_type& c) const
    requires requires(const A& a, const B& b, const first_cell& ca, const second_cell& cb) {
      a.vertex_positions(ca);
      b.vertex_positions(cb);
    }
  {
    const auto pa = a_.vertex_positions(c.first.cell);
    const auto pb = b_.vertex_positions(c.second.cell);
    const auto ea = surjection(c.first);
    const auto eb = surjection(c.second);
    std::vector<RVector> out;
    for (std::size_t k = 0; k < ea.size(); ++k) {
      RVector v = pa[static_cast<std::size_t>(ea[k])];
      const RVector& w = pb[static_cast<std::size_t>(eb[k])];
      v.insert(v.end(), w.begin(), w.end());
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  template <class C>
  static Simplex<C> reapply(Simplex<C> x, const std::vector<int>& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = degeneracy(x, *it);
    return x;
  }

  static bool disjoint(const std::vector<int>& u, const std::vector<int>& v) {
    for (int a : u)
      if (std::find(v.begin(), v.end(), a) != v.end()) return false;
    return true;
  }

  A a_;
  B b_;
};

/// The n-fold product S_1 x ... x S_n of simplicial sets sharing a cell type.
template <SimplicialSet S>
class Power {
 public:
  using factor_cell = typename S::cell_type;
  using cell_type = std::vector<Simplex<factor_cell>>;

  explicit Power(std::vector<S> factors) : factors_(std::move(factors)) {}
  Power(const S& factor, int n) : factors_(static_cast<std::size_t>(n), factor) {}

  int arity() const { return static_cast<int>(factors_.size()); }
  const S& factor(int k) const { return factors_[static_cast<std::size_t>(k)]; }

  /// The normal form of a tuple of equal-dimensional factor simplices.
  Simplex<cell_type> tuple(const cell_type& xs) const {
    if (xs.size() != factors_.size())
      throw DimensionMismatch("tuple of " + std::to_string(xs.size()) + " factors for a " +
                              std::to_string(factors_.size()) + "-fold product");
    const int m = xs.empty() ? 0 : xs.front().dim();
    std::vector<std::vector<int>> etas;
    for (const auto& x : xs) {
      if (x.dim() != m) throw DimensionMismatch("tuple factors of different dimensions");
      etas.push_back(surjection(x));
    }
    std::vector<std::vector<int>*> refs;
    for (auto& e : etas) refs.push_back(&e);
    std::vector<int> common = detail::factor_common_degeneracies(refs);
    cell_type c;
    for (std::size_t k = 0; k < xs.size(); ++k)
      c.push_back(from_surjection(xs[k].cell, xs[k].cell_dim, etas[k]));
    const int dim = m - static_cast<int>(common.size());
    return Simplex<cell_type>{std::move(c), dim, std::move(common)};
  }

  Simplex<factor_cell> project(const Simplex<cell_type>& z, int k) const {
    Simplex<factor_cell> x = z.cell[static_cast<std::size_t>(k)];
    for (auto it = z.deg_word.rbegin(); it != z.deg_word.rend(); ++it) x = degeneracy(x, *it);
    return x;
  }

  int cell_dim(const cell_type& c) const { return c.empty() ? 0 : c.front().dim(); }

  Simplex<cell_type> cell_face(const cell_type& c, int i) const {
    cell_type faces;
    faces.reserve(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) faces.push_back(face(factors_[k], c[k], i));
    return tuple(faces);
  }

  std::string cell_name(const cell_type& c) const {
    std::string out = "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ";";
      out += simplex_name(factors_[k], c[k]);
    }
    return out + ")";
  }

  bool is_locally_finite() const
    requires requires(const S& s) { s.is_locally_finite(); }
  {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const S& s) { return s.is_locally_finite(); });
  }

  int max_dim() const
    requires EnumerableSimplicialSet<S>
  {
    int total = 0;
    for (const auto& f : factors_) {
      if (f.max_dim() < 0) return -1;
      total += f.max_dim();
    }
    return total;
  }

  std::vector<cell_type> cells(int m) const
    requires EnumerableSimplicialSet<S>
  {
    // Factor simplices of dimension m, then keep tuples with no repeat
    // position shared by all factors.
    std::vector<std::vector<Simplex<factor_cell>>> options;
    for (const auto& f : factors_) {
      std::vector<Simplex<factor_cell>> opts;
      for (int p = 0; p <= std::min(m, f.max_dim()); ++p)
        for (const auto& c : f.cells(p)) {
          auto ds = degeneracies_of(factor_cell(c), p, m);
          opts.insert(opts.end(), ds.begin(), ds.end());
        }
      options.push_back(std::move(opts));
    }
    std::vector<cell_type> out;
    if (factors_.empty()) {
      if (m == 0) out.emplace_back();
      return out;
    }
    cell_type current;
    std::vector<int> shared(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == factors_.size()) {
        for (int v : shared)
          if (v == static_cast<int>(factors_.size())) return;
        out.push_back(current);
        return;
      }
      for (const auto& x : options[k]) {
        for (int j : x.deg_word) ++shared[static_cast<std::size_t>(j)];
        current.push_back(x);
        self(self, k + 1);
        current.pop_back();
        for (int j : x.deg_word) --shared[static_cast<std::size_t>(j)];
      }
    };
    rec(rec, 0);
    return out;
  }

  std::vector<RVector> vertex_positions(const cell_type& c) const
    requires requires(const S& s, const factor_cell& fc) { s.vertex_positions(fc); }
  {
    const int m = cell_dim(c);
    std::vector<RVector> out(static_cast<std::size_t>(m + 1));
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto pos = factors_[k].vertex_positions(c[k].cell);
      const auto eta = surjection(c[k]);
      for (int v = 0; v <= m; ++v) {
        const RVector& p = pos[static_cast<std::size_t>(eta[static_cast<std::size_t>(v)])];
        out[static_cast<std::size_t>(v)].insert(out[static_cast<std::size_t>(v)].end(), p.begin(),
                                                p.end());
      }
    }
    return out;
  }

 private:
  std::vector<S> factors_;
};

}  // namespace ditri
