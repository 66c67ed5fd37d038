#pragma once

// Subgroups G of Z^n x| Sigma_n: point group, translation lattice, canonical
// orbit representatives on Xi^n and the finite quotients Xi^n / G.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ditri/finite_set.hpp"
#include "ditri/group.hpp"
#include "ditri/lattice.hpp"
#include "ditri/xi.hpp"

namespace ditri {

/// Image of G in Sigma_n with one element of G over each permutation.
struct PointGroup {
  std::vector<Permutation> elements;      // elements[0] is the identity
  std::vector<GroupElement> coset_reps;   // coset_reps[k] maps to elements[k]

  std::size_t order() const { return elements.size(); }
};

inline PointGroup point_group(const GroupPresentation& G) {
  PointGroup pg;
  std::map<Permutation, std::size_t> seen;
  pg.elements.push_back(Permutation::identity(G.n));
  pg.coset_reps.push_back(GroupElement::identity(G.n));
  seen.emplace(pg.elements.front(), 0);
  for (std::size_t k = 0; k < pg.elements.size(); ++k) {
    for (const auto& [name, s] : G.generators) {
      GroupElement g = compose(s, pg.coset_reps[k]);
      if (seen.emplace(g.perm, pg.elements.size()).second) {
        pg.elements.push_back(g.perm);
        pg.coset_reps.push_back(std::move(g));
      }
    }
  }
  return pg;
}

/// T = G n Z^n. Generated by the Schreier elements r_{s.sigma}^-1 s r_sigma,
/// which are exactly the words of length <= 2|P|+1 needed to close T.
inline Lattice translation_subgroup(const GroupPresentation& G, const PointGroup& pg) {
  std::map<Permutation, std::size_t> where;
  for (std::size_t k = 0; k < pg.elements.size(); ++k) where.emplace(pg.elements[k], k);
  IntMatrix gens;
  for (std::size_t k = 0; k < pg.elements.size(); ++k) {
    for (const auto& [name, s] : G.generators) {
      GroupElement g = compose(s, pg.coset_reps[k]);
      const GroupElement& r = pg.coset_reps[where.at(g.perm)];
      GroupElement t = compose(invert(r), g);
      if (!t.perm.is_identity()) throw Error("internal: Schreier element is not a translation");
      gens.push_back(t.trans);
    }
  }
  return Lattice(G.n, std::move(gens));
}

inline Lattice translation_subgroup(const GroupPresentation& G) {
  return translation_subgroup(G, point_group(G));
}

inline bool chain_less(const XiCell& a, const XiCell& b) { return vertex_chain(a) < vertex_chain(b); }

struct FixedPointWitness {
  GroupElement element;
  RVector point;
};

/// Everything needed to work with one subgroup G; computed once.
class CrystallographicGroup {
 public:
  explicit CrystallographicGroup(GroupPresentation G)
      : presentation_(std::move(G)), points_(ditri::point_group(presentation_)),
        lattice_(translation_subgroup(presentation_, points_)) {}

  const GroupPresentation& presentation() const { return presentation_; }
  const PointGroup& point_group() const { return points_; }
  const Lattice& translations() const { return lattice_; }
  int dim() const { return presentation_.n; }
  bool cocompact() const { return lattice_.full_rank(); }

  void require_cocompact() const {
    if (!cocompact())
      throw NonCocompact("translation subgroup has rank " + std::to_string(lattice_.rank()) +
                         " < " + std::to_string(dim()) + "; the quotient is not compact");
  }

  /// Translates x so that its first vertex lies in the HNF box.
  XiCell reduce_translation(const XiCell& x) const {
    const LatticePoint v0 = vertex_chain(x).front();
    const LatticePoint r = lattice_.reduce(v0);
    LatticePoint shift(v0.size());
    for (std::size_t k = 0; k < v0.size(); ++k) shift[k] = r[k] - v0[k];
    return act(GroupElement::translation(std::move(shift)), x);
  }

  /// Lexicographically least (by vertex chain) member of the orbit of x.
  XiCell canonical_orbit_rep(const XiCell& x) const {
    require_cocompact();
    std::optional<XiCell> best;
    for (const auto& r : points_.coset_reps) {
      XiCell y = reduce_translation(act(r, x));
      if (!best || chain_less(y, *best)) best = std::move(y);
    }
    return *best;
  }

  /// Whether some element other than the identity maps x to itself.
  bool has_nontrivial_stabilizer(const XiCell& x) const {
    require_cocompact();
    const XiCell base = reduce_translation(x);
    for (std::size_t k = 1; k < points_.coset_reps.size(); ++k)
      if (reduce_translation(act(points_.coset_reps[k], x)) == base) return true;
    return false;
  }

  /// Exact test: (sigma, v) fixes a point of R^n iff the sum of v over every
  /// cycle of sigma vanishes. For each coset sigma.T this asks whether some
  /// t in T makes the cycle sums of v_sigma + t vanish, an integer lattice
  /// membership problem. Returns a fixing element when one exists.
  std::optional<FixedPointWitness> fixed_point_witness() const {
    const std::size_t nb = lattice_.basis().size();
    for (std::size_t k = 1; k < points_.elements.size(); ++k) {
      const GroupElement& r = points_.coset_reps[k];
      const auto cycles = r.perm.cycles();
      auto cycle_sums = [&](const LatticePoint& v) {
        LatticePoint out;
        for (const auto& c : cycles) {
          std::int64_t s = 0;
          for (int i : c) s += v[static_cast<std::size_t>(i)];
          out.push_back(s);
        }
        return out;
      };
      // Rows [cycle_sums(h_j) | e_j] for the lattice basis h_j.
      IntMatrix rows;
      for (std::size_t j = 0; j < nb; ++j) {
        LatticePoint row = cycle_sums(lattice_.basis()[j]);
        row.resize(cycles.size() + nb, 0);
        row[cycles.size() + j] = 1;
        rows.push_back(std::move(row));
      }
      const auto piv = hermite_reduce(rows, cycles.size());
      LatticePoint target = cycle_sums(r.trans);
      for (auto& x : target) x = -x;
      std::vector<std::int64_t> coeff(nb, 0);
      bool member = true;
      for (std::size_t p = 0; p < piv.size() && member; ++p) {
        const std::int64_t a = rows[p][piv[p]];
        if (target[piv[p]] % a != 0) {
          member = false;
          break;
        }
        const std::int64_t f = target[piv[p]] / a;
        for (std::size_t c = 0; c < cycles.size(); ++c) target[c] -= f * rows[p][c];
        for (std::size_t j = 0; j < nb; ++j) coeff[j] += f * rows[p][cycles.size() + j];
      }
      if (!member || std::any_of(target.begin(), target.end(), [](auto x) { return x != 0; }))
        continue;
      LatticePoint v = r.trans;
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeff[j] * lattice_.basis()[j][i];
      GroupElement g{r.perm, v};
      // Walk each cycle: x_{sigma(i)} = x_i + v_{sigma(i)}.
      RVector x(v.size(), Rational(0));
      for (const auto& c : cycles)
        for (std::size_t a = 1; a < c.size(); ++a)
          x[static_cast<std::size_t>(c[a])] =
              x[static_cast<std::size_t>(c[a - 1])] + v[static_cast<std::size_t>(c[a])];
      return FixedPointWitness{std::move(g), std::move(x)};
    }
    return std::nullopt;
  }

  bool is_fixed_point_free() const { return !fixed_point_witness().has_value(); }

 private:
  GroupPresentation presentation_;
  PointGroup points_;
  Lattice lattice_;
};

inline XiCell canonical_orbit_rep(const CrystallographicGroup& G, const XiCell& x) {
  return G.canonical_orbit_rep(x);
}

/// The finite simplicial set Xi^n / G together with the representative of
/// each orbit in Xi^n.
class QuotientSet {
 public:
  using cell_type = CellId;

  QuotientSet(FinitePresentation set, std::vector<XiCell> reps, std::vector<bool> stabilized)
      : set_(std::move(set)), reps_(std::move(reps)), stabilized_(std::move(stabilized)) {}

  const FinitePresentation& table() const { return set_; }
  const XiCell& representative(CellId c) const { return reps_.at(c); }
  bool stabilized(CellId c) const { return stabilized_.at(c); }
  bool any_stabilized() const {
    return std::find(stabilized_.begin(), stabilized_.end(), true) != stabilized_.end();
  }

  /// The cell whose orbit contains x (a nondegenerate cell of Xi^n).
  CellId cell_of(const CrystallographicGroup& G, const XiCell& x) const {
    auto id = set_.find(xi_cell_name(G.canonical_orbit_rep(x)));
    if (!id) throw InvalidPresentation("orbit of " + xi_cell_name(x) + " is not a quotient cell");
    return *id;
  }

  int cell_dim(CellId c) const { return set_.cell_dim(c); }
  Simplex<CellId> cell_face(CellId c, int i) const { return set_.cell_face(c, i); }
  std::string cell_name(CellId c) const { return set_.cell_name(c); }
  int max_dim() const { return set_.max_dim(); }
  const std::vector<CellId>& cells(int k) const { return set_.cells(k); }

  /// Positions in R^n of the vertices of the representative lift.
  std::vector<RVector> lift_positions(CellId c) const {
    std::vector<RVector> out;
    for (const auto& v : vertex_chain(reps_.at(c))) {
      RVector p;
      for (auto x : v) p.emplace_back(x);
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  FinitePresentation set_;
  std::vector<XiCell> reps_;
  std::vector<bool> stabilized_;
};

/// Xi^n / G for cocompact G. Cells are the canonical representatives of the
/// orbits of nondegenerate simplices, ordered by dimension then vertex chain.
inline QuotientSet quotient(const CrystallographicGroup& G) {
  G.require_cocompact();
  const int n = G.dim();
  const Lattice& T = G.translations();
  std::vector<std::int64_t> lo(static_cast<std::size_t>(n), 0), hi(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) hi[static_cast<std::size_t>(k)] = T.basis()[k][k];
  // Every orbit meets the cells whose first vertex lies in the HNF box.
  const XiWindow window = xi_window(lo, hi);

  std::vector<std::vector<XiCell>> reps_by_dim(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    std::set<std::vector<LatticePoint>> seen;
    for (const XiCell& c : window.cells(m)) {
      const LatticePoint v0 = vertex_chain(c).front();
      bool in_box = true;
      for (int k = 0; k < n; ++k)
        if (v0[static_cast<std::size_t>(k)] >= hi[static_cast<std::size_t>(k)]) in_box = false;
      if (!in_box) continue;
      XiCell r = G.canonical_orbit_rep(c);
      if (seen.insert(vertex_chain(r)).second) reps_by_dim[static_cast<std::size_t>(m)].push_back(std::move(r));
    }
    std::sort(reps_by_dim[static_cast<std::size_t>(m)].begin(),
              reps_by_dim[static_cast<std::size_t>(m)].end(), chain_less);
  }

  const XiPower xi = xi_power(n);
  FinitePresentation set;
  std::vector<XiCell> reps;
  std::vector<bool> stabilized;
  for (int m = 0; m <= n; ++m) {
    for (const XiCell& r : reps_by_dim[static_cast<std::size_t>(m)]) {
      std::vector<Simplex<CellId>> faces;
      if (m > 0) {
        for (int i = 0; i <= m; ++i) {
          const Simplex<XiCell> f = xi.cell_face(r, i);
          const auto id = set.find(xi_cell_name(G.canonical_orbit_rep(f.cell)));
          if (!id) throw Error("internal: face orbit of " + xi_cell_name(r) + " missing");
          faces.push_back(Simplex<CellId>{*id, f.cell_dim, f.deg_word});
        }
      }
      set.add_cell(xi_cell_name(r), m, std::move(faces));
      stabilized.push_back(G.has_nontrivial_stabilizer(r));
      reps.push_back(r);
    }
  }
  return QuotientSet(std::move(set), std::move(reps), std::move(stabilized));
}

}  // namespace ditri
