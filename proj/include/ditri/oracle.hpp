#pragma once

// Geometric reference for the conal preorder of R^n / G with fibre (R^n)+.
// x <= y in R^n / G iff some lift g y dominates x coordinatewise; inside an
// open window the comparison is made along monotone paths that stay in the
// union of the translates of the window.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ditri/quotient.hpp"
#include "ditri/rational.hpp"

namespace ditri {

/// An element g with x <= g y coordinatewise. Exists whenever G is
/// cocompact: for each coset the search runs over the lattice points of one
/// HNF box [x - r y, x - r y + diag(H)], which always contains one.
inline std::optional<GroupElement> dominating_lift(const CrystallographicGroup& G, const RVector& x,
                                                   const RVector& y) {
  G.require_cocompact();
  if (static_cast<int>(x.size()) != G.dim() || static_cast<int>(y.size()) != G.dim())
    throw DimensionMismatch("points of R^" + std::to_string(x.size()) + " and R^" + std::to_string(y.size()) +
                            " for a group acting on R^" + std::to_string(G.dim()));
  const auto& H = G.translations().basis();
  for (const auto& r : G.point_group().coset_reps) {
    const RVector ry = act(r, y);
    RVector lo(x.size()), hi(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      lo[k] = x[k] - ry[k];
      hi[k] = lo[k] + H[k][k];
    }
    std::optional<LatticePoint> found;
    G.translations().for_each_in_box(lo, hi, [&](const LatticePoint& t) {
      if (!found) found = t;
    });
    if (found) return compose(GroupElement::translation(*found), r);
  }
  return std::nullopt;
}

/// Whole-space mode.
inline bool quotient_order_oracle(const CrystallographicGroup& G, const RVector& x, const RVector& y) {
  return dominating_lift(G, x, y).has_value();
}

struct OpenBox {
  RVector lo, hi;

  bool contains(const RVector& p) const {
    for (std::size_t k = 0; k < p.size(); ++k)
      if (!(lo[k] < p[k] && p[k] < hi[k])) return false;
    return true;
  }

  friend bool operator==(const OpenBox&, const OpenBox&) = default;
  friend bool operator<(const OpenBox& a, const OpenBox& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  }
};

namespace detail {

// {z : z_k >= c_k, or z_k > c_k where strict_k}.
struct UpSet {
  RVector corner;
  std::vector<bool> strict;

  bool admits(const RVector& z) const {
    for (std::size_t k = 0; k < z.size(); ++k)
      if (z[k] < corner[k] || (strict[k] && z[k] == corner[k])) return false;
    return true;
  }

  bool contains(const UpSet& o) const {
    for (std::size_t k = 0; k < corner.size(); ++k) {
      if (corner[k] > o.corner[k]) return false;
      if (corner[k] == o.corner[k] && strict[k] && !o.strict[k]) return false;
    }
    return true;
  }
};

inline OpenBox image(const GroupElement& g, const OpenBox& b) {
  return OpenBox{act(g, b.lo), act(g, b.hi)};
}

// Every g with (target - g p) strictly inside `box`, restricted to lifts of p.
template <class F>
void lifts_into(const CrystallographicGroup& G, const RVector& p, const OpenBox& box, F&& f) {
  for (const auto& r : G.point_group().coset_reps) {
    const RVector rp = act(r, p);
    RVector lo(p.size()), hi(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      lo[k] = box.lo[k] - rp[k];
      hi[k] = box.hi[k] - rp[k];
    }
    G.translations().for_each_in_box(lo, hi, [&](const LatticePoint& t) {
      RVector q = rp;
      for (std::size_t k = 0; k < q.size(); ++k) q[k] += t[k];
      if (box.contains(q)) f(q);
    });
  }
}

}  // namespace detail

/// Window mode: x and y are points of the open box W, and the comparison is
/// made in the image of W in R^n / G. The reachable part of each translate
/// gW is an up-set; it is carried back to W by g^-1, so the search runs over
/// finitely many up-sets of W.
inline bool quotient_order_oracle(const CrystallographicGroup& G, const RVector& x, const RVector& y,
                                  const OpenBox& window, std::size_t max_states = 100000) {
  G.require_cocompact();
  const std::size_t n = static_cast<std::size_t>(G.dim());
  if (x.size() != n || y.size() != n || window.lo.size() != n || window.hi.size() != n)
    throw DimensionMismatch("oracle inputs must live in R^" + std::to_string(n));
  if (!window.contains(x)) throw OutsideRegion("x = " + to_string(x) + " is outside the window");
  if (!window.contains(y)) throw OutsideRegion("y = " + to_string(y) + " is outside the window");

  // Elements k != id with kW meeting W, one per translate.
  std::vector<std::pair<OpenBox, GroupElement>> neighbours;
  for (const auto& r : G.point_group().coset_reps) {
    const OpenBox rw = detail::image(r, window);
    RVector lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
      lo[k] = window.lo[k] - rw.hi[k];
      hi[k] = window.hi[k] - rw.lo[k];
    }
    G.translations().for_each_in_box(lo, hi, [&](const LatticePoint& t) {
      OpenBox c = rw;
      bool meets = true;
      for (std::size_t k = 0; k < n; ++k) {
        c.lo[k] += t[k];
        c.hi[k] += t[k];
        if (!(c.lo[k] < window.hi[k] && window.lo[k] < c.hi[k])) meets = false;
      }
      if (!meets || c == window) return;
      for (const auto& [box, g] : neighbours)
        if (box == c) return;
      neighbours.emplace_back(std::move(c), compose(GroupElement::translation(t), r));
    });
  }

  std::vector<detail::UpSet> reached;
  std::vector<std::size_t> work;
  auto add = [&](detail::UpSet u) {
    for (const auto& e : reached)
      if (e.contains(u)) return;
    if (reached.size() >= max_states)
      throw Error("window oracle exceeded " + std::to_string(max_states) + " states");
    reached.push_back(std::move(u));
    work.push_back(reached.size() - 1);
  };
  add(detail::UpSet{x, std::vector<bool>(n, false)});
  while (!work.empty()) {
    const detail::UpSet u = reached[work.back()];
    work.pop_back();
    for (const auto& [c, k] : neighbours) {
      detail::UpSet v{RVector(n), std::vector<bool>(n, true)};
      bool feasible = true;
      for (std::size_t i = 0; i < n && feasible; ++i) {
        const Rational lo = std::max(window.lo[i], c.lo[i]);
        const Rational hi = std::min(window.hi[i], c.hi[i]);
        if (u.corner[i] > lo) {
          v.corner[i] = u.corner[i];
          v.strict[i] = u.strict[i];
        } else {
          v.corner[i] = lo;
        }
        feasible = v.corner[i] < hi;
      }
      if (!feasible) continue;
      const GroupElement back = invert(k);
      add(detail::UpSet{act(back, v.corner), back.perm.apply(v.strict)});
    }
  }

  for (const auto& u : reached) {
    bool hit = false;
    detail::lifts_into(G, y, window, [&](const RVector& q) { hit = hit || u.admits(q); });
    if (hit) return true;
  }
  return false;
}

}  // namespace ditri
