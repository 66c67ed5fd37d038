#pragma once

// Points of geometric realizations and the preorders they carry.
//
// A point of the k-simplex is t = (t_1, ..., t_k) with 1 >= t_1 >= ... >= t_k >= 0;
// vertex j is (1^j, 0^{k-j}) and the barycentric weight of vertex j is
// t_j - t_{j+1} (t_0 = 1, t_{k+1} = 0). The coface d_0 prepends 1, d_i
// (0 < i < k) repeats t_i and d_k appends 0; the codegeneracy for s_j
// deletes t_{j+1}. Both maps are monotone for the coordinatewise order.

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ditri/product.hpp"
#include "ditri/rational.hpp"
#include "ditri/simplex.hpp"
#include "ditri/xi.hpp"

namespace ditri {

class SimplexPoint {
 public:
  SimplexPoint() = default;

  explicit SimplexPoint(RVector t) : t_(std::move(t)) {
    Rational prev = 1;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (t_[i] > prev || t_[i] < 0)
        throw MembershipViolation(to_string(t_) + " is not a point of the " + std::to_string(t_.size()) +
                                  "-simplex");
      prev = t_[i];
    }
  }

  int dim() const { return static_cast<int>(t_.size()); }
  const RVector& coords() const { return t_; }

  bool interior() const {
    Rational prev = 1;
    for (const auto& x : t_) {
      if (x >= prev) return false;
      prev = x;
    }
    return t_.empty() || t_.back() > 0;
  }

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  RVector t_;
};

inline bool coordinatewise_leq(const RVector& a, const RVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool simplex_leq(const SimplexPoint& x, const SimplexPoint& y) {
  if (x.dim() != y.dim())
    throw DimensionMismatch("comparing points of the " + std::to_string(x.dim()) + "- and " +
                            std::to_string(y.dim()) + "-simplex");
  return coordinatewise_leq(x.coords(), y.coords());
}

/// Barycentric weights w_0..w_k of t.
inline RVector barycentric(const RVector& t) {
  RVector w;
  Rational prev = 1;
  for (const auto& x : t) {
    w.push_back(prev - x);
    prev = x;
  }
  w.push_back(prev);
  return w;
}

/// A point in the interior of a nondegenerate cell.
template <class Cell>
struct StreamPoint {
  Cell cell{};
  int dim = 0;
  RVector coords;

  friend bool operator==(const StreamPoint&, const StreamPoint&) = default;
  friend bool operator<(const StreamPoint& a, const StreamPoint& b) {
    if (a.cell != b.cell) return a.cell < b.cell;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.coords < b.coords;
  }
};

/// The point of |S| represented by (x, t), with t in the simplex of
/// dimension x.dim(), as an interior point of a nondegenerate cell.
template <SimplicialSet S>
StreamPoint<typename S::cell_type> canonicalize_point(const S& s, simplex_t<S> x, const SimplexPoint& point) {
  if (point.dim() != x.dim())
    throw DimensionMismatch("a point of the " + std::to_string(point.dim()) + "-simplex on a " +
                            std::to_string(x.dim()) + "-simplex");
  RVector t = point.coords();
  for (;;) {
    if (x.is_degenerate()) {
      const int j = x.deg_word.front();
      t.erase(t.begin() + j);
      x.deg_word.erase(x.deg_word.begin());
      continue;
    }
    const int k = x.dim();
    if (k == 0) break;
    int i = -1;
    if (t.front() == 1)
      i = 0;
    else if (t.back() == 0)
      i = k;
    else
      for (int l = 1; l < k; ++l)
        if (t[static_cast<std::size_t>(l - 1)] == t[static_cast<std::size_t>(l)]) {
          i = l;
          break;
        }
    if (i < 0) break;
    t.erase(t.begin() + (i == 0 ? 0 : i - 1));
    x = face(s, x, i);
  }
  return StreamPoint<typename S::cell_type>{std::move(x.cell), x.cell_dim, std::move(t)};
}

template <SimplicialSet S>
StreamPoint<typename S::cell_type> canonicalize_point(const S& s, const typename S::cell_type& cell,
                                                      const SimplexPoint& point) {
  return canonicalize_point(s, nondegenerate(cell, static_cast<int>(s.cell_dim(cell))), point);
}

/// Rejects points that are not already canonical.
template <SimplicialSet S>
void require_canonical(const S& s, const StreamPoint<typename S::cell_type>& p) {
  if (s.cell_dim(p.cell) != p.dim || static_cast<int>(p.coords.size()) != p.dim)
    throw MembershipViolation("point on " + s.cell_name(p.cell) + " has " + std::to_string(p.coords.size()) +
                              " coordinates, expected " + std::to_string(s.cell_dim(p.cell)));
  if (!SimplexPoint(p.coords).interior())
    throw MembershipViolation("point " + to_string(p.coords) + " on " + s.cell_name(p.cell) +
                              " is not interior; canonicalize it first");
}

/// The face of the nondegenerate m-cell spanned by the vertices `keep`
/// (ascending).
template <SimplicialSet S>
simplex_t<S> face_on(const S& s, const typename S::cell_type& cell, int m, const std::vector<int>& keep) {
  simplex_t<S> x = nondegenerate(cell, m);
  std::size_t k = keep.size();
  for (int v = m; v >= 0; --v) {
    if (k > 0 && keep[k - 1] == v) {
      --k;
      continue;
    }
    x = face(s, x, v);
  }
  return x;
}

/// Calls f on every nonempty ascending subset of {0..m}.
template <class F>
void for_each_vertex_subset(int m, F&& f) {
  const unsigned total = 1u << static_cast<unsigned>(m + 1);
  std::vector<int> subset;
  for (unsigned mask = 1; mask < total; ++mask) {
    subset.clear();
    for (int v = 0; v <= m; ++v)
      if (mask & (1u << static_cast<unsigned>(v))) subset.push_back(v);
    f(subset);
  }
}

/// Coordinates in the m-simplex of the point with coordinates t on the face
/// spanned by `keep`.
inline RVector embed_coords(const RVector& t, const std::vector<int>& keep, int m) {
  const RVector w = barycentric(t);
  RVector u(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (int l = 1; l <= keep[j]; ++l) u[static_cast<std::size_t>(l - 1)] += w[j];
  return u;
}

template <class S>
concept Charted = SimplicialSet<S> && requires(const S& s, const typename S::cell_type& c) {
  { s.vertex_positions(c) } -> std::convertible_to<std::vector<RVector>>;
};

/// Position in the chart of S.
template <Charted S>
RVector chart_position(const S& s, const StreamPoint<typename S::cell_type>& p) {
  const auto pos = s.vertex_positions(p.cell);
  const RVector w = barycentric(p.coords);
  RVector x(pos.front().size(), Rational(0));
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += w[j] * pos[j][i];
  return x;
}

template <class Cell>
struct Region {
  enum class Kind { whole, star, window, custom };

  Kind kind = Kind::whole;
  Cell cell{};
  RVector lo, hi;
  std::function<bool(const StreamPoint<Cell>&)> predicate;
  std::string description = "whole";

  static Region whole() { return Region{}; }
  static Region star(Cell c, std::string name) {
    Region r;
    r.kind = Kind::star;
    r.cell = std::move(c);
    r.description = "star " + name;
    return r;
  }
  static Region window(RVector lo, RVector hi) {
    if (lo.size() != hi.size()) throw DimensionMismatch("window bounds of different lengths");
    Region r;
    r.kind = Kind::window;
    r.description = "window";
    for (std::size_t i = 0; i < lo.size(); ++i)
      r.description += " " + to_string(lo[i]) + " " + to_string(hi[i]);
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    return r;
  }
  static Region custom(std::function<bool(const StreamPoint<Cell>&)> f, std::string description) {
    Region r;
    r.kind = Kind::custom;
    r.predicate = std::move(f);
    r.description = std::move(description);
    return r;
  }
};

/// Whether the cell `c` is an iterated face of the nondegenerate m-cell.
template <SimplicialSet S>
bool has_face(const S& s, const typename S::cell_type& cell, int m, const typename S::cell_type& c) {
  const int k = static_cast<int>(s.cell_dim(c));
  if (k > m) return false;
  bool found = false;
  for_each_vertex_subset(m, [&](const std::vector<int>& keep) {
    if (found || static_cast<int>(keep.size()) != k + 1) return;
    const auto f = face_on(s, cell, m, keep);
    if (!f.is_degenerate() && f.cell == c) found = true;
  });
  return found;
}

template <SimplicialSet S>
bool in_region(const S& s, const Region<typename S::cell_type>& r, const StreamPoint<typename S::cell_type>& p) {
  using R = Region<typename S::cell_type>;
  switch (r.kind) {
    case R::Kind::whole:
      return true;
    case R::Kind::star:
      return has_face(s, p.cell, p.dim, r.cell);
    case R::Kind::custom:
      return r.predicate(p);
    case R::Kind::window:
      if constexpr (Charted<S>) {
        const RVector x = chart_position(s, p);
        if (x.size() != r.lo.size())
          throw DimensionMismatch("window of dimension " + std::to_string(r.lo.size()) + " on a chart of dimension " +
                                  std::to_string(x.size()));
        for (std::size_t i = 0; i < x.size(); ++i)
          if (!(r.lo[i] < x[i] && x[i] < r.hi[i])) return false;
        return true;
      } else {
        throw Error("window regions need a simplicial set with vertex positions");
      }
  }
  return false;
}

struct RegionOrderOptions {
  bool augment = true;
  std::size_t max_points = 20000;
};

/// Samples with the reflexive-transitive closure of single-simplex
/// comparabilities, computed over the samples and the auxiliary points added
/// by augmentation. Every asserted pair has a recorded chain.
template <class Cell>
struct RegionOrder {
  struct Step {
    std::size_t from;
    std::size_t to;
    Cell witness;
  };

  static constexpr const char* label = "sound, oracle-validated";

  std::string region;
  std::vector<StreamPoint<Cell>> samples;
  std::vector<StreamPoint<Cell>> points;        // samples first (deduplicated), then auxiliary
  std::vector<std::size_t> sample_point;        // sample index -> point index
  std::vector<boost::dynamic_bitset<>> relation;  // over samples
  std::vector<Cell> cells;                                              // witnesses
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges;  // over points, to cell index
  std::size_t edge_count = 0;
  bool truncated = false;

  std::size_t size() const { return samples.size(); }
  bool leq(std::size_t i, std::size_t j) const { return relation.at(i).test(j); }

  std::size_t related_pairs() const {
    std::size_t n = 0;
    for (const auto& row : relation) n += row.count();
    return n;
  }

  bool is_preorder() const {
    for (std::size_t i = 0; i < relation.size(); ++i) {
      if (!relation[i].test(i)) return false;
      for (std::size_t j = relation[i].find_first(); j != boost::dynamic_bitset<>::npos;
           j = relation[i].find_next(j))
        if (!relation[j].is_subset_of(relation[i])) return false;
    }
    return true;
  }

  /// Single-simplex steps from sample i to sample j; empty when i == j
  /// or when the pair is unrelated.
  std::vector<Step> chain(std::size_t i, std::size_t j) const {
    const std::size_t a = sample_point.at(i), b = sample_point.at(j);
    if (a == b) return {};
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(points.size());
    std::vector<bool> seen(points.size(), false);
    std::deque<std::size_t> queue{a};
    seen[a] = true;
    while (!queue.empty() && !seen[b]) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& [v, c] : edges[u])
        if (!seen[v]) {
          seen[v] = true;
          parent[v] = std::make_pair(u, c);
          queue.push_back(v);
        }
    }
    std::vector<Step> out;
    if (!seen[b]) return out;
    for (std::size_t v = b; v != a; v = parent[v]->first)
      out.push_back(Step{parent[v]->first, v, cells[parent[v]->second]});
    std::reverse(out.begin(), out.end());
    return out;
  }
};

namespace detail {

// Strongly connected components in reverse topological order (sinks first).
inline std::vector<std::size_t> strong_components(const std::vector<std::vector<std::size_t>>& adj,
                                                  std::size_t& count) {
  const std::size_t n = adj.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, none), low(n, 0), comp(n, none);
  std::vector<std::size_t> stack;
  std::vector<bool> on_stack(n, false);
  std::size_t next = 0;
  count = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != none) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.edge++];
        if (index[w] == none) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace detail

template <EnumerableSimplicialSet S>
RegionOrder<typename S::cell_type> region_order(const S& s, const Region<typename S::cell_type>& region,
                                                std::vector<StreamPoint<typename S::cell_type>> samples,
                                                const RegionOrderOptions& options = {}) {
  using Cell = typename S::cell_type;
  RegionOrder<Cell> out;
  out.region = region.description;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    require_canonical(s, samples[i]);
    if (!in_region(s, region, samples[i]))
      throw OutsideRegion("sample " + std::to_string(i) + " on " + s.cell_name(samples[i].cell) + " at " +
                          to_string(samples[i].coords) + " lies outside the region " + region.description);
  }

  // Every way a nondegenerate cell sits in the closure of another one.
  struct Embedding {
    std::size_t sigma;
    int m;
    std::vector<int> keep;
  };
  std::vector<Cell> cells;
  std::vector<int> cell_dims;
  std::map<Cell, std::vector<Embedding>> cofaces;
  for (int m = 0; m <= s.max_dim(); ++m)
    for (const auto& c0 : s.cells(m)) {
      const Cell c(c0);
      const std::size_t sigma = cells.size();
      cells.push_back(c);
      cell_dims.push_back(m);
      for_each_vertex_subset(m, [&](const std::vector<int>& keep) {
        const auto f = face_on(s, c, m, keep);
        if (!f.is_degenerate()) cofaces[f.cell].push_back(Embedding{sigma, m, keep});
      });
    }

  std::map<StreamPoint<Cell>, std::size_t> where;
  std::vector<std::vector<std::pair<std::size_t, RVector>>> members(cells.size());
  std::deque<std::size_t> pending;
  auto add_point = [&](StreamPoint<Cell> p) -> std::size_t {
    auto it = where.find(p);
    if (it != where.end()) return it->second;
    const std::size_t id = out.points.size();
    where.emplace(p, id);
    out.points.push_back(std::move(p));
    pending.push_back(id);
    return id;
  };
  for (const auto& p : samples) out.sample_point.push_back(add_point(p));
  out.samples = std::move(samples);

  auto offer = [&](std::size_t sigma, const RVector& u) {
    if (out.points.size() >= options.max_points) {
      out.truncated = true;
      return;
    }
    auto p = canonicalize_point(s, cells[sigma], SimplexPoint(u));
    if (!where.count(p) && in_region(s, region, p)) add_point(std::move(p));
  };

  while (!pending.empty()) {
    const std::size_t id = pending.front();
    pending.pop_front();
    const StreamPoint<Cell> p = out.points[id];
    auto cf = cofaces.find(p.cell);
    if (cf == cofaces.end()) continue;
    for (const auto& e : cf->second) {
      RVector u = embed_coords(p.coords, e.keep, e.m);
      auto& here = members[e.sigma];
      if (std::find_if(here.begin(), here.end(), [&](const auto& q) { return q.first == id && q.second == u; }) !=
          here.end())
        continue;
      if (options.augment) {
        // Projections onto the codimension-one faces, upwards and downwards.
        for (int l = 1; l <= e.m; ++l) {
          RVector up = u, down = u;
          up[static_cast<std::size_t>(l - 1)] = l == 1 ? Rational(1) : u[static_cast<std::size_t>(l - 2)];
          down[static_cast<std::size_t>(l - 1)] = l == e.m ? Rational(0) : u[static_cast<std::size_t>(l)];
          if (up != u) offer(e.sigma, up);
          if (down != u) offer(e.sigma, down);
        }
        // Meets and joins with the points already seen in this cell.
        for (const auto& [other, w] : here) {
          RVector lo = u, hi = u;
          for (std::size_t k = 0; k < u.size(); ++k) {
            lo[k] = std::min(u[k], w[k]);
            hi[k] = std::max(u[k], w[k]);
          }
          if (lo != u && lo != w) offer(e.sigma, lo);
          if (hi != u && hi != w) offer(e.sigma, hi);
        }
      }
      here.emplace_back(id, std::move(u));
    }
  }

  // Single-simplex comparabilities. Only the order of coordinate values
  // matters, so they are replaced by their ranks first.
  const std::size_t n = out.points.size();
  std::map<Rational, int> rank_of;
  for (const auto& here : members)
    for (const auto& entry : here)
      for (const auto& x : entry.second) rank_of.emplace(x, 0);
  {
    int r = 0;
    for (auto& [value, rk] : rank_of) rk = r++;
  }
  std::vector<std::vector<std::size_t>> adj(n);
  out.cells = cells;
  out.edges.assign(n, {});
  std::vector<boost::dynamic_bitset<>> linked(n, boost::dynamic_bitset<>(n));
  for (std::size_t sigma = 0; sigma < cells.size(); ++sigma) {
    std::vector<std::pair<std::size_t, std::vector<int>>> here;
    for (const auto& [id, u] : members[sigma]) {
      std::vector<int> ranks;
      for (const auto& x : u) ranks.push_back(rank_of.at(x));
      here.emplace_back(id, std::move(ranks));
    }
    for (const auto& [a, u] : here)
      for (const auto& [b, w] : here) {
        if (a == b || linked[a].test(b)) continue;
        bool leq = true;
        for (std::size_t k = 0; k < u.size() && leq; ++k) leq = u[k] <= w[k];
        if (!leq) continue;
        linked[a].set(b);
        adj[a].push_back(b);
        out.edges[a].emplace_back(b, sigma);
        ++out.edge_count;
      }
  }

  // Reflexive-transitive closure through the condensation.
  std::size_t ncomp = 0;
  const auto comp = detail::strong_components(adj, ncomp);
  std::vector<std::vector<std::size_t>> members_of(ncomp);
  for (std::size_t v = 0; v < n; ++v) members_of[comp[v]].push_back(v);
  std::vector<boost::dynamic_bitset<>> reach(ncomp, boost::dynamic_bitset<>(ncomp));
  for (std::size_t c = 0; c < ncomp; ++c) {
    reach[c].set(c);
    for (std::size_t v : members_of[c])
      for (std::size_t w : adj[v])
        if (comp[w] != c) reach[c] |= reach[comp[w]];
  }
  const std::size_t ns = out.samples.size();
  out.relation.assign(ns, boost::dynamic_bitset<>(ns));
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < ns; ++j)
      if (reach[comp[out.sample_point[i]]].test(comp[out.sample_point[j]])) out.relation[i].set(j);
  return out;
}

// The directed line.

/// Vertex i at i, the edge (i, i+1) at parameter t at i + t.
inline Rational line_comparison(const StreamPoint<LineCell>& p) {
  if (p.cell.dim == 0) return Rational(p.cell.start);
  return Rational(p.cell.start) + p.coords.front();
}

inline StreamPoint<LineCell> line_point(const Rational& x) {
  const Integer f = floor(x);
  const auto i = static_cast<std::int64_t>(f);
  if (x == Rational(f)) return StreamPoint<LineCell>{line_vertex(i), 0, {}};
  return StreamPoint<LineCell>{line_edge(i), 1, {x - Rational(f)}};
}

// Xi^n, identified with R^n through the line coordinate in each factor.

inline StreamPoint<XiCell> xi_point(const RVector& x) {
  const std::size_t n = x.size();
  LatticePoint base(n);
  RVector frac(n);
  for (std::size_t k = 0; k < n; ++k) {
    base[k] = static_cast<std::int64_t>(floor(x[k]));
    frac[k] = x[k] - Rational(base[k]);
  }
  RVector levels;
  for (const auto& f : frac)
    if (f > 0) levels.push_back(f);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<LatticePoint> chain{base};
  for (const auto& level : levels) {
    LatticePoint v = base;
    for (std::size_t k = 0; k < n; ++k)
      if (frac[k] >= level) ++v[k];
    chain.push_back(std::move(v));
  }
  const int m = static_cast<int>(levels.size());
  return StreamPoint<XiCell>{xi_cell_from_chain(chain), m, std::move(levels)};
}

inline RVector xi_position(const StreamPoint<XiCell>& p) {
  const auto chain = vertex_chain(p.cell);
  RVector x;
  for (auto v : chain.front()) x.emplace_back(v);
  for (std::size_t l = 1; l < chain.size(); ++l)
    for (std::size_t k = 0; k < x.size(); ++k)
      x[k] += p.coords[l - 1] * Rational(chain[l][k] - chain[l - 1][k]);
  return x;
}

// Products.

/// The point (a, b) of |A x B|.
template <SimplicialSet A, SimplicialSet B>
StreamPoint<typename Product<A, B>::cell_type> product_point(const Product<A, B>& prod,
                                                             const StreamPoint<typename A::cell_type>& a,
                                                             const StreamPoint<typename B::cell_type>& b) {
  RVector levels = a.coords;
  levels.insert(levels.end(), b.coords.begin(), b.coords.end());
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  auto lift = [&](const auto& cell, int dim, const RVector& own) {
    // Position l of `levels` missing from `own` is a repeat at l - 1.
    std::vector<int> word;
    for (int l = static_cast<int>(levels.size()); l >= 1; --l)
      if (std::find(own.begin(), own.end(), levels[static_cast<std::size_t>(l - 1)]) == own.end())
        word.push_back(l - 1);
    using C = std::decay_t<decltype(cell)>;
    return Simplex<C>{cell, dim, std::move(word)};
  };
  const auto z = prod.pair(lift(a.cell, a.dim, a.coords), lift(b.cell, b.dim, b.coords));
  const int m = static_cast<int>(levels.size());
  return StreamPoint<typename Product<A, B>::cell_type>{z.cell, m, std::move(levels)};
}

template <SimplicialSet A, SimplicialSet B>
std::pair<StreamPoint<typename A::cell_type>, StreamPoint<typename B::cell_type>> product_factors(
    const Product<A, B>& prod, const StreamPoint<typename Product<A, B>::cell_type>& p) {
  const SimplexPoint t(p.coords);
  return {canonicalize_point(prod.first(), p.cell.first, t), canonicalize_point(prod.second(), p.cell.second, t)};
}

struct ProductDiscrepancy {
  std::size_t i;
  std::size_t j;
  bool product;
  bool factors;
};

struct ProductCheckReport {
  std::size_t samples = 0;
  std::size_t pairs_checked = 0;
  std::size_t product_points = 0;
  bool truncated = false;
  std::vector<ProductDiscrepancy> discrepancies;
};

/// Compares the region order of |A x B| on the product region with the
/// conjunction of the factor region orders, on every pair of samples.
template <EnumerableSimplicialSet A, EnumerableSimplicialSet B>
ProductCheckReport product_order_check(
    const A& a, const Region<typename A::cell_type>& ra, const B& b, const Region<typename B::cell_type>& rb,
    const std::vector<std::pair<StreamPoint<typename A::cell_type>, StreamPoint<typename B::cell_type>>>& samples,
    const RegionOrderOptions& options = {}) {
  const Product<A, B> prod(a, b);
  using PC = typename Product<A, B>::cell_type;
  const auto region = Region<PC>::custom(
      [&](const StreamPoint<PC>& p) {
        const auto [pa, pb] = product_factors(prod, p);
        return in_region(a, ra, pa) && in_region(b, rb, pb);
      },
      "(" + ra.description + ") x (" + rb.description + ")");
  std::vector<StreamPoint<PC>> ps;
  std::vector<StreamPoint<typename A::cell_type>> as;
  std::vector<StreamPoint<typename B::cell_type>> bs;
  for (const auto& [x, y] : samples) {
    ps.push_back(product_point(prod, x, y));
    as.push_back(x);
    bs.push_back(y);
  }
  const auto op = region_order(prod, region, std::move(ps), options);
  const auto oa = region_order(a, ra, std::move(as), options);
  const auto ob = region_order(b, rb, std::move(bs), options);
  ProductCheckReport report;
  report.samples = samples.size();
  report.product_points = op.points.size();
  report.truncated = op.truncated || oa.truncated || ob.truncated;
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < samples.size(); ++j) {
      ++report.pairs_checked;
      const bool lhs = op.leq(i, j);
      const bool rhs = oa.leq(i, j) && ob.leq(i, j);
      if (lhs != rhs) report.discrepancies.push_back({i, j, lhs, rhs});
    }
  return report;
}

}  // namespace ditri
