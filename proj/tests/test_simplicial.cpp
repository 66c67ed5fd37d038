#include <gtest/gtest.h>

#include <map>
#include <random>

#include "ditri/ditri.hpp"
#include "oracles/xi_model.hpp"

using namespace ditri;

namespace {

Simplex<XiCell> xi_simplex(const oracle::Sequence& chain) {
  const XiCell c = xi_cell_from_chain(chain);
  return nondegenerate(c, static_cast<int>(chain.size()) - 1);
}

// All words of at most `len` structure maps that make sense starting in dimension m.
void for_each_word(int m, int len, const std::function<void(const std::vector<Op>&)>& f) {
  std::vector<Op> w;
  auto rec = [&](auto&& self, int dim) -> void {
    f(w);
    if (static_cast<int>(w.size()) == len) return;
    for (int i = 0; i <= dim; ++i) {
      if (dim >= 1) {
        w.push_back(d(i));
        self(self, dim - 1);
        w.pop_back();
      }
      w.push_back(s(i));
      self(self, dim + 1);
      w.pop_back();
    }
  };
  rec(rec, m);
}

oracle::Sequence model_apply(oracle::Sequence x, const std::vector<Op>& ops) {
  for (const Op& op : ops)
    x = op.kind == Op::Kind::face ? oracle::face(x, op.index) : oracle::degeneracy(x, op.index);
  return x;
}

}  // namespace

TEST(Line, FacesOfAnEdge) {
  const Line line;
  EXPECT_EQ(line.cell_face(line_edge(3), 0), nondegenerate(line_vertex(4), 0));
  EXPECT_EQ(line.cell_face(line_edge(3), 1), nondegenerate(line_vertex(3), 0));
  EXPECT_THROW(line.cell_face(line_vertex(3), 0), IndexOutOfRange);
  EXPECT_EQ(line.cell_name(line_edge(-1)), "-1>0");
}

TEST(Simplex, DegeneracyWordsAreNormalForms) {
  EXPECT_TRUE(valid_degeneracy_word(1, {2, 0}));
  EXPECT_FALSE(valid_degeneracy_word(1, {0, 2}));
  EXPECT_FALSE(valid_degeneracy_word(0, {2}));
  const auto all = degeneracies_of(line_edge(0), 1, 3);
  EXPECT_EQ(all.size(), 3u);
  for (const auto& x : all) EXPECT_TRUE(valid_degeneracy_word(1, x.deg_word));
}

TEST(Simplex, FaceOfDegenerateEdgeIsItsVertex) {
  const Line line;
  const auto x = degeneracy(nondegenerate(line_vertex(0), 0), 0);
  EXPECT_EQ(face(line, x, 0), nondegenerate(line_vertex(0), 0));
  EXPECT_EQ(face(line, x, 1), nondegenerate(line_vertex(0), 0));
  const auto y = degeneracy(nondegenerate(line_edge(0), 1), 0);
  EXPECT_EQ(face(line, y, 2), degeneracy(nondegenerate(line_vertex(0), 0), 0));
  EXPECT_EQ(simplex_name(line, y), "s0(0>1)");
}

TEST(Simplex, OutOfRangeOperatorsThrow) {
  const Line line;
  const auto v = nondegenerate(line_vertex(0), 0);
  EXPECT_THROW(face(line, v, 0), IndexOutOfRange);
  EXPECT_THROW(degeneracy(v, 1), IndexOutOfRange);
  EXPECT_THROW(apply(line, v, {d(0)}), DimensionMismatch);
  EXPECT_THROW(apply(line, nondegenerate(line_edge(0), 1), {s(0), d(3)}), DimensionMismatch);
}

TEST(Identities, LineAndPowersHaveNoViolations) {
  EXPECT_TRUE(verify_identities(LineWindow(0, 3), 4).ok());
  EXPECT_TRUE(verify_identities(xi_window(2, 0, 2), 4).ok());
  const auto r = verify_identities(xi_window(3, 0, 1), 4);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.checks, 1000u);
}

TEST(Identities, BudgetStopsEarly) {
  const auto r = verify_identities(xi_window(2, 0, 2), 4, 10);
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_EQ(r.simplices_checked, 10u);
}

TEST(Identities, CorruptedFaceIsReported) {
  auto m = materialize(xi_window(2, 0, 1));
  const CellId tri = m.set.cells(2).front();
  auto f = m.set.cell_face(tri, 0);
  const auto& edges = m.set.cells(1);
  f.cell = *std::find_if(edges.begin(), edges.end(), [&](CellId e) {
    return m.set.cell_face(e, 0) != m.set.cell_face(f.cell, 0) && m.set.cell_face(e, 1) != m.set.cell_face(f.cell, 1);
  });
  m.set.replace_face(tri, 0, f);
  const auto r = verify_identities(m.set, 3);
  ASSERT_FALSE(r.ok());
  bool face_face = false;
  for (const auto& v : r.violations) face_face = face_face || v.family == identity_families()[0];
  EXPECT_TRUE(face_face);
}

TEST(Xi, FVectorsMatchTheChainModel) {
  for (int n = 1; n <= 3; ++n) {
    const auto w = xi_window(n, 0, 2);
    const auto model = oracle::nondegenerate_cells(n, 0, 2, n);
    std::vector<std::size_t> expect(static_cast<std::size_t>(n + 1), 0);
    for (const auto& c : model) ++expect[c.size() - 1];
    EXPECT_EQ(f_vector(w), expect) << "n=" << n;
    EXPECT_EQ(euler_characteristic(w), 1);
  }
}

TEST(Xi, CubeHasSixTetrahedra) {
  EXPECT_EQ(f_vector(xi_window(3, 0, 1)), (std::vector<std::size_t>{8, 19, 18, 6}));
}

TEST(Xi, CellNamesRoundTrip) {
  for (const auto& chain : oracle::nondegenerate_cells(3, -1, 1, 3)) {
    const XiCell c = xi_cell_from_chain(chain);
    EXPECT_EQ(vertex_chain(c), chain);
    EXPECT_EQ(parse_xi_cell(xi_cell_name(c)), c);
  }
  EXPECT_THROW(xi_cell_from_chain({{0, 0}, {2, 0}}), InvalidPresentation);
  EXPECT_THROW(xi_cell_from_chain({{0, 0}, {0, 0}}), InvalidPresentation);
  EXPECT_THROW(parse_xi_cell("0,0>1"), ParseError);
}

// Every word of structure maps acts on normal forms exactly as deleting and
// repeating vertices acts on vertex sequences.
TEST(EilenbergZilber, OperatorsMatchTheVertexModel) {
  const XiPower xi = xi_power(2);
  std::size_t words = 0;
  for (const auto& chain : oracle::nondegenerate_cells(2, 0, 1, 2)) {
    const auto x = xi_simplex(chain);
    for_each_word(x.dim(), 3, [&](const std::vector<Op>& w) {
      const auto y = apply(xi, x, w);
      const auto seq = model_apply(chain, w);
      ASSERT_EQ(oracle::sequence_of(xi, y), seq);
      EXPECT_EQ(y.is_degenerate(), oracle::is_degenerate(seq));
      EXPECT_TRUE(valid_degeneracy_word(y.cell_dim, y.deg_word));
      ++words;
    });
  }
  EXPECT_GT(words, 1000u);
}

// Normal forms are unique: two words with the same effect on vertex
// sequences give the same simplex, and different effects give different ones.
TEST(EilenbergZilber, NormalFormsAreUnique) {
  const XiPower xi = xi_power(2);
  for (const auto& chain : oracle::nondegenerate_cells(2, 0, 1, 2)) {
    const auto x = xi_simplex(chain);
    std::map<oracle::Sequence, Simplex<XiCell>> seen;
    std::map<Simplex<XiCell>, oracle::Sequence> back;
    for_each_word(x.dim(), 3, [&](const std::vector<Op>& w) {
      const auto y = apply(xi, x, w);
      const auto seq = model_apply(chain, w);
      auto [it, fresh] = seen.emplace(seq, y);
      if (!fresh) {
        EXPECT_EQ(it->second, y);
      }
      auto [jt, fresh2] = back.emplace(y, seq);
      if (!fresh2) {
        EXPECT_EQ(jt->second, seq);
      }
    });
  }
}

TEST(EilenbergZilber, RandomLongWordsInXi3) {
  const XiPower xi = xi_power(3);
  std::mt19937_64 rng(7);
  const auto cells = oracle::nondegenerate_cells(3, -1, 1, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& chain = cells[rng() % cells.size()];
    auto x = xi_simplex(chain);
    auto seq = chain;
    for (int step = 0; step < 8; ++step) {
      const int m = x.dim();
      const bool do_face = m >= 1 && rng() % 2 == 0;
      const int i = static_cast<int>(rng() % static_cast<unsigned>(m + 1));
      x = do_face ? face(xi, x, i) : degeneracy(x, i);
      seq = do_face ? oracle::face(seq, i) : oracle::degeneracy(seq, i);
    }
    ASSERT_EQ(oracle::sequence_of(xi, x), seq);
  }
}

TEST(Product, TupleProjectsBack) {
  const XiPower xi = xi_power(2);
  for (const auto& chain : oracle::nondegenerate_cells(2, 0, 1, 2)) {
    auto x = degeneracy(xi_simplex(chain), 0);
    const auto p0 = xi.project(x, 0);
    const auto p1 = xi.project(x, 1);
    EXPECT_EQ(xi.tuple({p0, p1}), x);
  }
}

TEST(Product, LineTimesLineIsXi2) {
  const Product<LineWindow, LineWindow> p(LineWindow(0, 2), LineWindow(0, 2));
  EXPECT_EQ(f_vector(p), f_vector(xi_window(2, 0, 2)));
  EXPECT_TRUE(verify_identities(p, 3).ok());
  const Product<LineWindow, LineWindow> square(LineWindow(0, 1), LineWindow(0, 1));
  EXPECT_EQ(square.cells(2).size(), 2u);
  EXPECT_THROW(square.pair(nondegenerate(line_edge(0), 1), nondegenerate(line_vertex(0), 0)), DimensionMismatch);
}

TEST(FinitePresentation, RejectsMalformedCells) {
  FinitePresentation s;
  const auto v = s.add_cell("v", 0, {});
  EXPECT_THROW(s.add_cell("v", 0, {}), InvalidPresentation);
  EXPECT_THROW(s.add_cell("e", 1, {nondegenerate(v, 0)}), InvalidPresentation);
  EXPECT_THROW(s.add_cell("e", 1, {nondegenerate(v, 0), nondegenerate(CellId{7}, 0)}), InvalidPresentation);
  const auto loop = s.add_cell("loop", 1, {nondegenerate(v, 0), nondegenerate(v, 0)});
  EXPECT_THROW(s.add_cell("t", 2, {nondegenerate(loop, 1), nondegenerate(loop, 1), nondegenerate(v, 0)}),
               InvalidPresentation);
  EXPECT_EQ(f_vector(s), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(euler_characteristic(s), 0);
}

TEST(FinitePresentation, DisjointUnionAddsFVectors) {
  const auto a = materialize(xi_window(2, 0, 1)).set;
  const auto b = materialize(LineWindow(0, 3)).set;
  const auto u = disjoint_union({a, b});
  EXPECT_EQ(f_vector(u), (std::vector<std::size_t>{8, 8, 2}));
  EXPECT_TRUE(verify_identities(u, 3).ok());
}
