#pragma once

// Elements of Z^n x| Sigma_n acting on R^n by x |-> perm(x) + trans.
//
// A permutation sigma moves coordinate i to position sigma(i):
// (sigma x)[sigma(i)] = x[i]. Composition follows the action,
//
//     (sigma, v) o (tau, w) = (sigma tau, v + sigma w),
//
// so the permutation acts on translations. The same convention is used for
// both orderings of the semidirect product that appear in the literature.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ditri/error.hpp"
#include "ditri/rational.hpp"
#include "ditri/xi.hpp"

namespace ditri {

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    Permutation p;
    p.image_.resize(static_cast<std::size_t>(n));
    std::iota(p.image_.begin(), p.image_.end(), 0);
    return p;
  }

  /// From 0-based images, image[i] = sigma(i).
  static Permutation from_images(std::vector<int> image) {
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
      if (v < 0 || v >= static_cast<int>(image.size()) || seen[static_cast<std::size_t>(v)])
        throw InvalidPresentation("not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
    Permutation p;
    p.image_ = std::move(image);
    return p;
  }

  /// From 1-based one-line notation.
  static Permutation from_one_line(const std::vector<int>& one_line) {
    std::vector<int> image;
    for (int v : one_line) image.push_back(v - 1);
    return from_images(std::move(image));
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return image_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != static_cast<int>(i)) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
      p.image_[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    return p;
  }

  /// Moves entry i of x to position sigma(i).
  template <class T>
  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != image_.size())
      throw DimensionMismatch("permutation of " + std::to_string(image_.size()) +
                              " letters applied to a vector of length " +
                              std::to_string(x.size()));
    std::vector<T> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[static_cast<std::size_t>(image_[i])] = x[i];
    return y;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      for (int j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
        seen[static_cast<std::size_t>(j)] = true;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::string one_line() const {
    std::string out;
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(image_[i] + 1);
    }
    return out;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DimensionMismatch("composing permutations of different sizes");
    Permutation p;
    p.image_.resize(b.image_.size());
    for (std::size_t i = 0; i < b.image_.size(); ++i) p.image_[i] = a(b(static_cast<int>(i)));
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

struct GroupElement {
  Permutation perm;
  LatticePoint trans;

  int dim() const { return perm.size(); }

  static GroupElement identity(int n) {
    return {Permutation::identity(n), LatticePoint(static_cast<std::size_t>(n), 0)};
  }
  static GroupElement translation(LatticePoint v) {
    const int n = static_cast<int>(v.size());
    return {Permutation::identity(n), std::move(v)};
  }

  bool is_identity() const {
    return perm.is_identity() && std::all_of(trans.begin(), trans.end(), [](auto t) { return t == 0; });
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.dim() != h.dim() || g.trans.size() != h.trans.size())
    throw DimensionMismatch("composing elements of Z^" + std::to_string(g.dim()) + " x| S_" +
                            std::to_string(g.dim()) + " and Z^" + std::to_string(h.dim()) +
                            " x| S_" + std::to_string(h.dim()));
  LatticePoint t = g.perm.apply(h.trans);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += g.trans[i];
  return {g.perm * h.perm, std::move(t)};
}

inline GroupElement invert(const GroupElement& g) {
  Permutation inv = g.perm.inverse();
  LatticePoint t = inv.apply(g.trans);
  for (auto& x : t) x = -x;
  return {std::move(inv), std::move(t)};
}

inline GroupElement power(const GroupElement& g, long long k) {
  GroupElement base = k < 0 ? invert(g) : g;
  GroupElement out = GroupElement::identity(g.dim());
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out = compose(out, base);
  return out;
}

inline LatticePoint act(const GroupElement& g, const LatticePoint& x) {
  LatticePoint y = g.perm.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += g.trans[i];
  return y;
}

inline RVector act(const GroupElement& g, const RVector& x) {
  RVector y = g.perm.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += g.trans[i];
  return y;
}

/// Permutes the factors of a cell of Xi^n and shifts each by the translation.
inline XiCell act(const GroupElement& g, const XiCell& x) {
  if (static_cast<int>(x.size()) != g.dim())
    throw DimensionMismatch("element of Z^" + std::to_string(g.dim()) + " x| S_" +
                            std::to_string(g.dim()) + " acting on a cell of Xi^" +
                            std::to_string(x.size()));
  XiCell y = g.perm.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i].cell.start += g.trans[i];
  return y;
}

inline Simplex<XiCell> act(const GroupElement& g, const Simplex<XiCell>& x) {
  return Simplex<XiCell>{act(g, x.cell), x.cell_dim, x.deg_word};
}

inline std::string to_string(const GroupElement& g) {
  std::string out = "perm " + g.perm.one_line() + " trans";
  for (auto t : g.trans) out += " " + std::to_string(t);
  return out;
}

/// A word in named generators, e.g. a^2 b^-2.
struct WordLetter {
  std::string generator;
  long long exponent = 1;
};
using Word = std::vector<WordLetter>;

inline std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.generator;
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

struct GroupPresentation {
  int n = 0;
  std::vector<std::pair<std::string, GroupElement>> generators;
  std::vector<Word> relations;

  const GroupElement& generator(const std::string& name) const {
    for (const auto& [k, g] : generators)
      if (k == name) return g;
    throw UnknownGenerator("unknown generator '" + name + "'");
  }

  void add_generator(std::string name, GroupElement g) {
    if (g.dim() != n || static_cast<int>(g.trans.size()) != n)
      throw DimensionMismatch("generator '" + name + "' acts on R^" + std::to_string(g.dim()) +
                              " but the group is declared on R^" + std::to_string(n));
    for (const auto& [k, _] : generators)
      if (k == name) throw InvalidPresentation("duplicate generator '" + name + "'");
    generators.emplace_back(std::move(name), std::move(g));
  }
};

inline GroupElement evaluate(const GroupPresentation& G, const Word& w) {
  GroupElement out = GroupElement::identity(G.n);
  for (const auto& l : w) out = compose(out, power(G.generator(l.generator), l.exponent));
  return out;
}

/// True iff the word composes to the identity element.
inline bool verify_relation(const GroupPresentation& G, const Word& w) {
  return evaluate(G, w).is_identity();
}

}  // namespace ditri
