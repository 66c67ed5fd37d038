#pragma once

// Finitely generated rational cones, conal isometries of (R^n, (R^n)+), and
// the triangulability decision for flat conal manifolds R^n / G.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ditri/group.hpp"
#include "ditri/linalg.hpp"
#include "ditri/quotient.hpp"

namespace ditri {

using IntegerRay = std::vector<Integer>;

/// The primitive integer vector on the ray through v (v nonzero).
inline IntegerRay primitive_ray(const RVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, denominator(q));
  IntegerRay out;
  Integer g = 0;
  for (const auto& q : v) {
    out.push_back(numerator(q) * (l / denominator(q)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

inline RVector to_rational(const IntegerRay& r) {
  RVector out;
  for (const auto& x : r) out.emplace_back(x);
  return out;
}

inline std::string to_string(const IntegerRay& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += r[i].str();
  }
  return out + ")";
}

/// The cone of nonnegative combinations of finitely many rays in R^n. Rays
/// are kept in primitive integer form, deduplicated and sorted.
class RationalCone {
 public:
  RationalCone(int n, const std::vector<RVector>& rays) : n_(n) {
    if (n < 0) throw DimensionMismatch("negative ambient dimension");
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (static_cast<int>(rays[k].size()) != n)
        throw DimensionMismatch("ray " + std::to_string(k) + " has " + std::to_string(rays[k].size()) +
                                " coordinates in R^" + std::to_string(n));
      if (std::all_of(rays[k].begin(), rays[k].end(), [](const Rational& q) { return q == 0; }))
        throw InvalidPresentation("ray " + std::to_string(k) + " is zero");
      rays_.push_back(primitive_ray(rays[k]));
    }
    std::sort(rays_.begin(), rays_.end());
    rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
  }

  /// The positive orthant (R^n)+.
  static RationalCone orthant(int n) {
    std::vector<RVector> rays;
    for (int i = 0; i < n; ++i) {
      RVector e(static_cast<std::size_t>(n), Rational(0));
      e[static_cast<std::size_t>(i)] = 1;
      rays.push_back(std::move(e));
    }
    return RationalCone(n, rays);
  }

  int dim() const { return n_; }
  const std::vector<IntegerRay>& rays() const { return rays_; }

  friend bool operator==(const RationalCone&, const RationalCone&) = default;

 private:
  int n_;
  std::vector<IntegerRay> rays_;
};

inline std::size_t span_rank(const RationalCone& C) {
  RMatrix m;
  for (const auto& r : C.rays()) m.push_back(to_rational(r));
  return rank(std::move(m));
}

/// Whether v is a nonnegative combination of the rays of C.
inline bool contains(const RationalCone& C, const RVector& v) {
  if (static_cast<int>(v.size()) != C.dim())
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " tested against a cone in R^" +
                            std::to_string(C.dim()));
  std::vector<RVector> gens;
  for (const auto& r : C.rays()) gens.push_back(to_rational(r));
  return in_conic_hull(gens, v);
}

/// A minimal generating sublist. Rays are visited in order and dropped when
/// they lie in the cone of the rays still kept (other than themselves).
inline std::vector<IntegerRay> extremal_rays(const RationalCone& C) {
  std::vector<IntegerRay> kept = C.rays();
  std::size_t k = 0;
  while (k < kept.size()) {
    std::vector<RVector> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != k) others.push_back(to_rational(kept[j]));
    if (in_conic_hull(others, to_rational(kept[k])))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }
  return kept;
}

inline bool is_generating(const RationalCone& C) {
  return span_rank(C) == static_cast<std::size_t>(C.dim());
}

inline bool is_free(const RationalCone& C) {
  const auto ext = extremal_rays(C);
  RMatrix m;
  for (const auto& r : ext) m.push_back(to_rational(r));
  return rank(std::move(m)) == ext.size();
}

struct ConeReport {
  bool generating = false;
  bool free = false;
  std::vector<IntegerRay> extremal_rays;
  std::size_t span_rank = 0;
};

inline ConeReport check_cone(const RationalCone& C) {
  ConeReport r;
  r.extremal_rays = extremal_rays(C);
  r.span_rank = span_rank(C);
  r.generating = r.span_rank == static_cast<std::size_t>(C.dim());
  RMatrix m;
  for (const auto& ray : r.extremal_rays) m.push_back(to_rational(ray));
  r.free = rank(std::move(m)) == r.extremal_rays.size();
  return r;
}

/// x |-> perm(x) + translation.
struct ConalIsometry {
  Permutation perm;
  RVector translation;

  RVector operator()(const RVector& x) const {
    RVector y = perm.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
    return y;
  }
};

/// A x + t for a square matrix A given by rows.
inline RVector apply_affine(const RMatrix& A, const RVector& t, const RVector& x) {
  RVector y(A.size(), Rational(0));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
    y[i] += t[i];
  }
  return y;
}

/// The permutation matrix with column j equal to e_{sigma(j)}.
inline RMatrix permutation_matrix(const Permutation& p) {
  const auto n = static_cast<std::size_t>(p.size());
  RMatrix A(n, RVector(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) A[static_cast<std::size_t>(p(static_cast<int>(j)))][j] = 1;
  return A;
}

/// Splits x |-> A x + t into a coordinate permutation followed by a
/// translation, or reports why A does not preserve (R^n)+ isometrically.
inline ConalIsometry factor_conal_isometry(const RMatrix& A, const RVector& t) {
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i)
    if (A[i].size() != n)
      throw DimensionMismatch("matrix row " + std::to_string(i) + " has " + std::to_string(A[i].size()) +
                              " entries, expected " + std::to_string(n));
  if (t.size() != n)
    throw DimensionMismatch("translation of length " + std::to_string(t.size()) + " for a " +
                            std::to_string(n) + "x" + std::to_string(n) + " matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Rational dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += A[i][j] * A[k][j];
      if (dot != (i == k ? 1 : 0))
        throw NotOrthogonal("A A^T differs from the identity at (" + std::to_string(i) + "," +
                            std::to_string(k) + ")");
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (A[i][j] < 0) {
        RVector col;
        for (std::size_t r = 0; r < n; ++r) col.push_back(A[r][j]);
        throw NotConePreserving("column " + std::to_string(j) + " " + to_string(col) +
                                    " has a negative entry, so the positive orthant is not preserved",
                                j);
      }
  std::vector<int> image(n);
  for (std::size_t j = 0; j < n; ++j) {
    int hit = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (A[i][j] == 0) continue;
      if (A[i][j] != 1 || hit >= 0) {
        hit = -2;
        break;
      }
      hit = static_cast<int>(i);
    }
    if (hit < 0) throw NotPermutation("column " + std::to_string(j) + " is not a standard basis vector",
                                      j);
    image[j] = hit;
  }
  return ConalIsometry{Permutation::from_images(std::move(image)), t};
}

struct TriangulationWitness {
  QuotientSet quotient;
  std::vector<std::size_t> f_vector;
  long long euler = 0;
  bool fixed_point_free = false;
};

struct Component {
  RationalCone cone;
  std::optional<GroupPresentation> group;
};

struct TriangulabilityVerdict {
  ConeReport cone;
  bool triangulable = false;
  std::optional<TriangulationWitness> witness;
};

/// One verdict per component: triangulable iff the fiber cone is generating
/// and free. A group supplied with a triangulable cone yields Xi^n / G.
inline TriangulabilityVerdict triangulability_decision(const Component& c) {
  if (c.group && c.group->n != c.cone.dim())
    throw DimensionMismatch("cone lives in R^" + std::to_string(c.cone.dim()) + " but the group acts on R^" +
                            std::to_string(c.group->n));
  TriangulabilityVerdict v;
  v.cone = check_cone(c.cone);
  v.triangulable = v.cone.generating && v.cone.free;
  if (v.triangulable && c.group) {
    CrystallographicGroup G(*c.group);
    QuotientSet q = quotient(G);
    auto fv = f_vector(q.table());
    const long long chi = euler_characteristic(fv);
    v.witness = TriangulationWitness{std::move(q), std::move(fv), chi, G.is_fixed_point_free()};
  }
  return v;
}

inline std::vector<TriangulabilityVerdict> triangulability_decision(const std::vector<Component>& components) {
  std::vector<TriangulabilityVerdict> out;
  for (const auto& c : components) out.push_back(triangulability_decision(c));
  return out;
}

}  // namespace ditri
