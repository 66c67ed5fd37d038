#pragma once

// Line-oriented text formats. Blank lines and '#' comments are ignored;
// errors carry the 1-based line number.
//
//   simplicial set:  cell <id> dim <n>
//                    face <i> <cell-id> [deg <j1,j2,...>]
//   group:           dim <n>
//                    gen <name> perm <p1 ... pn> trans <t1 ... tn>
//                    rel <word>                 e.g. rel a^2 b^-2
//   cone:            dim <n>
//                    ray <q1 ... qn>
//   isometry:        row <q1 ... qn>            (n rows)
//                    trans <t1 ... tn>
//   region:          whole | star <cell-id> | window <lo1> <hi1> ... <lon> <hin>
//   samples:         point <cell-id> <t1> ... <tk>

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ditri/cone.hpp"
#include "ditri/finite_set.hpp"
#include "ditri/group.hpp"
#include "ditri/linalg.hpp"

namespace ditri::io {

struct Record {
  std::size_t line = 0;
  std::vector<std::string> tokens;
};

inline std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::vector<Record> read_records(std::istream& in) {
  std::vector<Record> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = split(line);
    if (!tokens.empty()) out.push_back(Record{n, std::move(tokens)});
  }
  return out;
}

inline long long parse_integer(const std::string& tok, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("expected an integer ") + what + ", got '" + tok + "'", line);
}

inline Rational parse_rational_at(const std::string& tok, std::size_t line) {
  try {
    return parse_rational(tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

inline void expect(const Record& r, std::size_t index, const char* keyword) {
  if (r.tokens.size() <= index || r.tokens[index] != keyword)
    throw ParseError(std::string("expected '") + keyword + "'", r.line);
}

// Simplicial sets.

inline std::vector<int> parse_deg_list(const std::string& tok, std::size_t line) {
  std::vector<int> out;
  if (tok.empty()) return out;
  std::size_t pos = 0;
  while (pos <= tok.size()) {
    std::size_t comma = tok.find(',', pos);
    if (comma == std::string::npos) comma = tok.size();
    out.push_back(static_cast<int>(parse_integer(tok.substr(pos, comma - pos), line, "degeneracy index")));
    pos = comma + 1;
  }
  return out;
}

inline FinitePresentation parse_simplicial(std::istream& in) {
  FinitePresentation set;
  const auto records = read_records(in);
  std::size_t k = 0;
  while (k < records.size()) {
    const Record& head = records[k];
    if (head.tokens[0] != "cell" || head.tokens.size() != 4 || head.tokens[2] != "dim")
      throw ParseError("expected 'cell <id> dim <n>'", head.line);
    const std::string name = head.tokens[1];
    const auto dim = static_cast<int>(parse_integer(head.tokens[3], head.line, "dimension"));
    ++k;
    std::vector<Simplex<CellId>> faces;
    while (k < records.size() && records[k].tokens[0] == "face") {
      const Record& r = records[k];
      if (r.tokens.size() != 3 && !(r.tokens.size() == 4 && r.tokens[3] == "deg") &&
          !(r.tokens.size() == 5 && r.tokens[3] == "deg"))
        throw ParseError("expected 'face <i> <cell-id> deg <j1,j2,...>'", r.line);
      const auto i = parse_integer(r.tokens[1], r.line, "face index");
      if (i != static_cast<long long>(faces.size()))
        throw ParseError("face " + std::to_string(i) + " of '" + name + "' out of order, expected face " +
                             std::to_string(faces.size()),
                         r.line);
      const auto id = set.find(r.tokens[2]);
      if (!id) throw ParseError("face refers to unknown cell '" + r.tokens[2] + "'", r.line);
      const std::vector<int> word = r.tokens.size() == 5 ? parse_deg_list(r.tokens[4], r.line) : std::vector<int>{};
      faces.push_back(Simplex<CellId>{*id, set.cell_dim(*id), word});
      ++k;
    }
    try {
      set.add_cell(name, dim, std::move(faces));
    } catch (const InvalidPresentation& e) {
      throw ParseError(e.what(), head.line);
    }
  }
  return set;
}

inline void export_simplicial(const FinitePresentation& set, std::ostream& out) {
  out << "# simplicial set: " << set.size() << " nondegenerate cells\n";
  for (int k = 0; k <= set.max_dim(); ++k)
    for (CellId c : set.cells(k)) {
      const std::string name = set.cell_name(c);
      if (name.empty() || split(name).size() != 1 || name.find('#') != std::string::npos)
        throw InvalidPresentation("cell name '" + name + "' cannot be written in the text format");
      out << "cell " << name << " dim " << k << "\n";
      if (k == 0) continue;
      for (int i = 0; i <= k; ++i) {
        const auto f = set.cell_face(c, i);
        out << "face " << i << " " << set.cell_name(f.cell);
        for (std::size_t j = 0; j < f.deg_word.size(); ++j) out << (j ? "," : " deg ") << f.deg_word[j];
        out << "\n";
      }
    }
}

// Groups.

inline Word parse_word(const std::vector<std::string>& tokens, std::size_t first, std::size_t line) {
  Word w;
  for (std::size_t k = first; k < tokens.size(); ++k) {
    const std::string& tok = tokens[k];
    const auto caret = tok.find('^');
    WordLetter l;
    l.generator = tok.substr(0, caret);
    if (l.generator.empty()) throw ParseError("empty generator name in '" + tok + "'", line);
    if (caret != std::string::npos) l.exponent = parse_integer(tok.substr(caret + 1), line, "exponent");
    w.push_back(std::move(l));
  }
  return w;
}

inline Word parse_word(const std::string& text) { return parse_word(split(text), 0, 0); }

inline GroupPresentation parse_group(std::istream& in) {
  const auto records = read_records(in);
  if (records.empty()) throw ParseError("empty group file", 0);
  const Record& head = records.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "dim") throw ParseError("expected 'dim <n>'", head.line);
  GroupPresentation G;
  G.n = static_cast<int>(parse_integer(head.tokens[1], head.line, "dimension"));
  if (G.n < 1) throw ParseError("dimension must be positive", head.line);
  const auto n = static_cast<std::size_t>(G.n);
  for (std::size_t k = 1; k < records.size(); ++k) {
    const Record& r = records[k];
    if (r.tokens[0] == "gen") {
      if (r.tokens.size() != 2 * n + 4 || r.tokens[2] != "perm" || r.tokens[3 + n] != "trans")
        throw ParseError("expected 'gen <name> perm <" + std::to_string(n) + " images> trans <" +
                             std::to_string(n) + " integers>'",
                         r.line);
      std::vector<int> one_line;
      LatticePoint trans;
      for (std::size_t i = 0; i < n; ++i) {
        one_line.push_back(static_cast<int>(parse_integer(r.tokens[3 + i], r.line, "permutation image")));
        trans.push_back(parse_integer(r.tokens[4 + n + i], r.line, "translation"));
      }
      try {
        G.add_generator(r.tokens[1], GroupElement{Permutation::from_one_line(one_line), std::move(trans)});
      } catch (const InvalidPresentation& e) {
        throw ParseError(e.what(), r.line);
      }
    } else if (r.tokens[0] == "rel") {
      Word w = parse_word(r.tokens, 1, r.line);
      for (const auto& l : w)
        if (std::none_of(G.generators.begin(), G.generators.end(),
                         [&](const auto& g) { return g.first == l.generator; }))
          throw ParseError("relation uses unknown generator '" + l.generator + "'", r.line);
      G.relations.push_back(std::move(w));
    } else {
      throw ParseError("unknown record '" + r.tokens[0] + "'", r.line);
    }
  }
  return G;
}

inline void export_group(const GroupPresentation& G, std::ostream& out) {
  out << "dim " << G.n << "\n";
  for (const auto& [name, g] : G.generators) {
    out << "gen " << name << " perm " << g.perm.one_line() << " trans";
    for (auto t : g.trans) out << " " << t;
    out << "\n";
  }
  for (const auto& w : G.relations) out << "rel " << to_string(w) << "\n";
}

// Cones.

inline RationalCone parse_cone(std::istream& in) {
  const auto records = read_records(in);
  if (records.empty()) throw ParseError("empty cone file", 0);
  const Record& head = records.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "dim") throw ParseError("expected 'dim <n>'", head.line);
  const auto n = parse_integer(head.tokens[1], head.line, "dimension");
  if (n < 0) throw ParseError("dimension must be nonnegative", head.line);
  std::vector<RVector> rays;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const Record& r = records[k];
    if (r.tokens[0] != "ray") throw ParseError("unknown record '" + r.tokens[0] + "'", r.line);
    if (static_cast<long long>(r.tokens.size()) != n + 1)
      throw ParseError("ray has " + std::to_string(r.tokens.size() - 1) + " coordinates, expected " +
                           std::to_string(n),
                       r.line);
    RVector v;
    for (std::size_t i = 1; i < r.tokens.size(); ++i) v.push_back(parse_rational_at(r.tokens[i], r.line));
    if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; }))
      throw ParseError("zero ray", r.line);
    rays.push_back(std::move(v));
  }
  return RationalCone(static_cast<int>(n), rays);
}

inline void export_cone(const RationalCone& C, std::ostream& out) {
  out << "dim " << C.dim() << "\n";
  for (const auto& r : C.rays()) {
    out << "ray";
    for (const auto& x : r) out << " " << x.str();
    out << "\n";
  }
}

// Affine maps x |-> A x + t.

struct AffineMap {
  RMatrix matrix;
  RVector translation;
};

inline AffineMap parse_affine(std::istream& in) {
  AffineMap m;
  std::size_t trans_line = 0;
  for (const auto& r : read_records(in)) {
    RVector v;
    for (std::size_t i = 1; i < r.tokens.size(); ++i) v.push_back(parse_rational_at(r.tokens[i], r.line));
    if (r.tokens[0] == "row") {
      if (trans_line) throw ParseError("row after trans", r.line);
      if (!m.matrix.empty() && v.size() != m.matrix.front().size())
        throw ParseError("row of length " + std::to_string(v.size()) + ", expected " +
                             std::to_string(m.matrix.front().size()),
                         r.line);
      m.matrix.push_back(std::move(v));
    } else if (r.tokens[0] == "trans") {
      if (trans_line) throw ParseError("second trans record", r.line);
      trans_line = r.line;
      m.translation = std::move(v);
    } else {
      throw ParseError("unknown record '" + r.tokens[0] + "'", r.line);
    }
  }
  if (m.matrix.empty()) throw ParseError("no matrix rows", 0);
  if (!trans_line) m.translation.assign(m.matrix.size(), Rational(0));
  if (m.translation.size() != m.matrix.size())
    throw ParseError("translation of length " + std::to_string(m.translation.size()) + " for " +
                         std::to_string(m.matrix.size()) + " rows",
                     trans_line);
  return m;
}

// Regions and samples.

struct RegionSpec {
  enum class Kind { whole, star, window };
  Kind kind = Kind::whole;
  std::string cell;
  RVector lo, hi;
};

inline RegionSpec parse_region(const std::vector<std::string>& tokens, std::size_t line = 0) {
  RegionSpec r;
  if (tokens.empty()) throw ParseError("empty region", line);
  if (tokens[0] == "whole" && tokens.size() == 1) return r;
  if (tokens[0] == "star" && tokens.size() == 2) {
    r.kind = RegionSpec::Kind::star;
    r.cell = tokens[1];
    return r;
  }
  if (tokens[0] == "window" && tokens.size() >= 3 && tokens.size() % 2 == 1) {
    r.kind = RegionSpec::Kind::window;
    for (std::size_t i = 1; i < tokens.size(); i += 2) {
      r.lo.push_back(parse_rational_at(tokens[i], line));
      r.hi.push_back(parse_rational_at(tokens[i + 1], line));
      if (!(r.lo.back() < r.hi.back())) throw ParseError("empty window interval", line);
    }
    return r;
  }
  throw ParseError("expected 'whole', 'star <cell-id>' or 'window <lo1> <hi1> ...'", line);
}

inline RegionSpec parse_region(const std::string& text) { return parse_region(split(text)); }

struct SampleSpec {
  std::size_t line = 0;
  std::string cell;
  RVector coords;
};

inline std::vector<SampleSpec> parse_samples(std::istream& in) {
  std::vector<SampleSpec> out;
  for (const auto& r : read_records(in)) {
    if (r.tokens[0] != "point" || r.tokens.size() < 2) throw ParseError("expected 'point <cell-id> <t1> ...'", r.line);
    SampleSpec s{r.line, r.tokens[1], {}};
    for (std::size_t i = 2; i < r.tokens.size(); ++i) s.coords.push_back(parse_rational_at(r.tokens[i], r.line));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace ditri::io
