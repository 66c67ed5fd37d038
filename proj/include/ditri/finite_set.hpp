#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ditri/simplex.hpp"

namespace ditri {

using CellId = std::uint32_t;

/// A simplicial set given by an explicit table of nondegenerate cells and
/// the normal forms of their faces.
class FinitePresentation {
 public:
  using cell_type = CellId;

  /// Adds a cell. Faces must refer to cells that are already present, so
  /// cells are added in nondecreasing dimension.
  CellId add_cell(std::string name, int dim, std::vector<Simplex<CellId>> faces) {
    if (dim < 0) throw InvalidPresentation("cell '" + name + "' has negative dimension");
    if (by_name_.count(name)) throw InvalidPresentation("duplicate cell '" + name + "'");
    if (static_cast<int>(faces.size()) != (dim == 0 ? 0 : dim + 1))
      throw InvalidPresentation("cell '" + name + "' of dimension " + std::to_string(dim) +
                                " needs " + std::to_string(dim == 0 ? 0 : dim + 1) + " faces");
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const auto& f = faces[i];
      if (f.cell >= cells_.size())
        throw InvalidPresentation("face " + std::to_string(i) + " of '" + name +
                                  "' refers to an unknown cell");
      if (f.cell_dim != cells_[f.cell].dim || !valid_degeneracy_word(f.cell_dim, f.deg_word))
        throw InvalidPresentation("face " + std::to_string(i) + " of '" + name +
                                  "' is not a normal-form simplex");
      if (f.dim() != dim - 1)
        throw InvalidPresentation("face " + std::to_string(i) + " of '" + name + "' has dimension " +
                                  std::to_string(f.dim()) + ", expected " +
                                  std::to_string(dim - 1));
    }
    const auto id = static_cast<CellId>(cells_.size());
    by_name_.emplace(name, id);
    cells_.push_back(Record{std::move(name), dim, std::move(faces)});
    if (static_cast<int>(by_dim_.size()) <= dim) by_dim_.resize(static_cast<std::size_t>(dim + 1));
    by_dim_[static_cast<std::size_t>(dim)].push_back(id);
    return id;
  }

  /// Overwrites one face entry without validation against the identities.
  void replace_face(CellId c, int i, Simplex<CellId> f) {
    auto& faces = cells_.at(c).faces;
    faces.at(static_cast<std::size_t>(i)) = std::move(f);
  }

  int cell_dim(CellId c) const { return cells_.at(c).dim; }

  Simplex<CellId> cell_face(CellId c, int i) const {
    const auto& rec = cells_.at(c);
    if (rec.dim == 0 || i < 0 || i > rec.dim)
      throw IndexOutOfRange("face d" + std::to_string(i) + " of cell '" + rec.name + "'");
    return rec.faces[static_cast<std::size_t>(i)];
  }

  std::string cell_name(CellId c) const { return cells_.at(c).name; }

  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  const std::vector<CellId>& cells(int k) const {
    static const std::vector<CellId> none;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[static_cast<std::size_t>(k)];
  }

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  std::optional<CellId> find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  bool is_locally_finite() const { return true; }

 private:
  struct Record {
    std::string name;
    int dim;
    std::vector<Simplex<CellId>> faces;
  };
  std::vector<Record> cells_;
  std::vector<std::vector<CellId>> by_dim_;
  std::unordered_map<std::string, CellId> by_name_;
};

/// Counts of nondegenerate simplices per degree.
template <EnumerableSimplicialSet S>
std::vector<std::size_t> f_vector(const S& s) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= s.max_dim(); ++k) {
    std::size_t n = 0;
    for ([[maybe_unused]] const auto& c : s.cells(k)) ++n;
    out.push_back(n);
  }
  // Trailing empty degrees do not count towards the dimension.
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline long long euler_characteristic(const std::vector<std::size_t>& fv) {
  long long chi = 0;
  for (std::size_t k = 0; k < fv.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(fv[k]);
  return chi;
}

template <EnumerableSimplicialSet S>
long long euler_characteristic(const S& s) {
  return euler_characteristic(f_vector(s));
}

template <class Cell>
struct Materialized {
  FinitePresentation set;
  std::vector<Cell> cells;        // indexed by CellId
  std::map<Cell, CellId> index;
};

/// Copies an enumerable simplicial set into an explicit table.
template <EnumerableSimplicialSet S>
Materialized<typename S::cell_type> materialize(const S& s) {
  using Cell = typename S::cell_type;
  Materialized<Cell> out;
  for (int k = 0; k <= s.max_dim(); ++k) {
    for (const auto& c0 : s.cells(k)) {
      const Cell c(c0);
      std::vector<Simplex<CellId>> faces;
      if (k > 0) {
        for (int i = 0; i <= k; ++i) {
          const Simplex<Cell> f = s.cell_face(c, i);
          auto it = out.index.find(f.cell);
          if (it == out.index.end())
            throw InvalidPresentation("face of " + s.cell_name(c) + " is not enumerated");
          faces.push_back(Simplex<CellId>{it->second, f.cell_dim, f.deg_word});
        }
      }
      const CellId id = out.set.add_cell(s.cell_name(c), k, std::move(faces));
      out.index.emplace(c, id);
      out.cells.push_back(c);
    }
  }
  return out;
}

/// Disjoint union; cell names are prefixed by the component index, "2:name".
inline FinitePresentation disjoint_union(const std::vector<FinitePresentation>& parts) {
  FinitePresentation out;
  int top = -1;
  for (const auto& p : parts) top = std::max(top, p.max_dim());
  std::vector<std::vector<CellId>> remap(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) remap[j].resize(parts[j].size());
  for (int k = 0; k <= top; ++k) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      for (CellId c : parts[j].cells(k)) {
        std::vector<Simplex<CellId>> faces;
        if (k > 0)
          for (int i = 0; i <= k; ++i) {
            auto f = parts[j].cell_face(c, i);
            f.cell = remap[j][f.cell];
            faces.push_back(std::move(f));
          }
        remap[j][c] =
            out.add_cell(std::to_string(j) + ":" + parts[j].cell_name(c), k, std::move(faces));
      }
    }
  }
  return out;
}

}  // namespace ditri
