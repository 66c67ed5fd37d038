#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ditri/ditri.hpp"
#include "oracles/orbit_oracle.hpp"

using namespace ditri;

namespace {

GroupPresentation group(const std::string& text) {
  std::istringstream in(text);
  return io::parse_group(in);
}

const char* torus = "dim 2\ngen a perm 1 2 trans 1 0\ngen b perm 1 2 trans 0 1\nrel a b a^-1 b^-1\n";
const char* klein = "dim 2\ngen a perm 2 1 trans 1 0\ngen b perm 2 1 trans 0 1\nrel a^2 b^-2\n";
const char* mirror = "dim 2\ngen r perm 2 1 trans 0 0\ngen a perm 1 2 trans 1 0\ngen b perm 1 2 trans 0 1\n";
const char* long_torus = "dim 2\ngen a perm 1 2 trans 2 0\ngen b perm 1 2 trans 0 1\n";
const char* cube = "dim 3\ngen a perm 1 2 3 trans 1 0 0\ngen b perm 1 2 3 trans 0 1 0\ngen c perm 1 2 3 trans 0 0 1\n";
const char* screw = "dim 3\ngen g perm 2 3 1 trans 1 0 0\ngen t perm 1 2 3 trans 1 -1 0\n";

Word word(const std::string& text) {
  std::istringstream in("dim 1\ngen a perm 1 trans 1\ngen b perm 1 trans 1\nrel " + text + "\n");
  return io::parse_group(in).relations.front();
}

GroupElement random_element(std::mt19937_64& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  LatticePoint t;
  for (int i = 0; i < n; ++i) t.push_back(static_cast<std::int64_t>(rng() % 11) - 5);
  return {Permutation::from_images(img), t};
}

}  // namespace

TEST(Permutation, OneLineAndCycles) {
  const auto p = Permutation::from_one_line({2, 3, 1});
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p.one_line(), "2 3 1");
  EXPECT_EQ((p * p.inverse()), Permutation::identity(3));
  EXPECT_EQ(p.cycles().size(), 1u);
  EXPECT_THROW(Permutation::from_one_line({1, 1}), InvalidPresentation);
  EXPECT_THROW(Permutation::from_one_line({0, 1}), InvalidPresentation);
}

TEST(GroupElement, ActsByMovingCoordinatesThenTranslating) {
  const GroupElement alpha{Permutation::from_one_line({2, 1}), {1, 0}};
  EXPECT_EQ(act(alpha, LatticePoint{2, 5}), (LatticePoint{6, 2}));
  const GroupElement c{Permutation::from_one_line({2, 3, 1}), {0, 0, 0}};
  // x[i] lands in coordinate sigma(i).
  EXPECT_EQ(act(c, LatticePoint{7, 8, 9}), (LatticePoint{9, 7, 8}));
}

TEST(GroupElement, CompositionIsFunctionComposition) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto g = random_element(rng, n), h = random_element(rng, n);
    LatticePoint x;
    for (int i = 0; i < n; ++i) x.push_back(static_cast<std::int64_t>(rng() % 21) - 10);
    EXPECT_EQ(act(compose(g, h), x), act(g, act(h, x)));
    EXPECT_TRUE(compose(g, invert(g)).is_identity());
    EXPECT_EQ(power(g, 3), compose(g, compose(g, g)));
    EXPECT_EQ(power(g, -2), invert(compose(g, g)));
  }
}

TEST(Relations, TorusAndKlein) {
  const auto T = group(torus), K = group(klein);
  EXPECT_TRUE(verify_relation(T, T.relations.front()));
  EXPECT_TRUE(verify_relation(K, word("a^2 b^-2")));
  EXPECT_FALSE(verify_relation(K, word("a b a^-1 b^-1")));
  EXPECT_FALSE(verify_relation(T, word("a^2")));
  EXPECT_THROW(evaluate(T, {{"c", 1}}), UnknownGenerator);
}

TEST(Lattice, HermiteBasis) {
  const Lattice L(2, {{2, 4}, {1, 3}, {0, 6}});
  EXPECT_EQ(L.basis(), (IntMatrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(L.index(), 2);
  EXPECT_TRUE(L.contains({3, 5}));
  EXPECT_FALSE(L.contains({1, 0}));
  const Lattice line(2, {{2, 2}, {3, 3}});
  EXPECT_EQ(line.rank(), 1);
  EXPECT_FALSE(line.full_rank());
}

// The index of a full-rank lattice is |det| of any basis; reduce() lands in the HNF box.
TEST(Lattice, IndexIsDeterminant) {
  std::mt19937_64 rng(11);
  int full = 0;
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(3, LatticePoint(3));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 9) - 4;
    const std::int64_t det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const Lattice L(3, m);
    EXPECT_EQ(L.full_rank(), det != 0);
    if (det == 0) continue;
    ++full;
    EXPECT_EQ(L.index(), det < 0 ? -det : det);
    for (const auto& row : m) EXPECT_TRUE(L.contains(row));
    LatticePoint v{static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20,
                   static_cast<std::int64_t>(rng() % 41) - 20};
    const auto r = L.reduce(v);
    for (int k = 0; k < 3; ++k) {
      EXPECT_GE(r[k], 0);
      EXPECT_LT(r[k], L.basis()[k][k]);
    }
    LatticePoint diff(3);
    for (int k = 0; k < 3; ++k) diff[k] = v[k] - r[k];
    EXPECT_TRUE(L.contains(diff));
  }
  EXPECT_GT(full, 100);
}

TEST(Crystallographic, KleinTranslationsAndPointGroup) {
  const CrystallographicGroup G(group(klein));
  EXPECT_EQ(G.point_group().order(), 2u);
  EXPECT_EQ(G.translations().basis(), (IntMatrix{{1, 1}, {0, 2}}));
  EXPECT_TRUE(G.cocompact());
  EXPECT_TRUE(G.is_fixed_point_free());
}

TEST(Crystallographic, MirrorHasFixedPoints) {
  const CrystallographicGroup G(group(mirror));
  const auto w = G.fixed_point_witness();
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(w->element.is_identity());
  EXPECT_EQ(act(w->element, w->point), w->point);
  const auto Q = quotient(G);
  EXPECT_TRUE(Q.any_stabilized());
}

TEST(Crystallographic, NonCocompactGroupsAreRejected) {
  const CrystallographicGroup G(group("dim 2\ngen a perm 1 2 trans 1 0\n"));
  EXPECT_FALSE(G.cocompact());
  EXPECT_THROW(quotient(G), NonCocompact);
  EXPECT_FALSE(G.fixed_point_witness().has_value());
  const CrystallographicGroup R(group("dim 2\ngen r perm 2 1 trans 0 0\n"));
  EXPECT_TRUE(R.fixed_point_witness().has_value());
}

// f-vectors of quotients against orbit counting in a window.
TEST(Quotient, MatchesOrbitEnumeration) {
  for (const auto* text : {torus, klein, mirror, long_torus}) {
    const auto P = group(text);
    const auto Q = quotient(CrystallographicGroup(P));
    EXPECT_EQ(f_vector(Q.table()), oracle::orbit_f_vector(P, 3)) << text;
  }
  for (const auto* text : {cube, screw}) {
    const auto P = group(text);
    const auto Q = quotient(CrystallographicGroup(P));
    EXPECT_EQ(f_vector(Q.table()), oracle::orbit_f_vector(P, 3)) << text;
  }
}

TEST(Quotient, TorusAndKleinAreSurfacesOfEulerCharacteristicZero) {
  for (const auto* text : {torus, klein}) {
    const auto Q = quotient(CrystallographicGroup(group(text)));
    EXPECT_EQ(f_vector(Q.table()), (std::vector<std::size_t>{1, 3, 2}));
    EXPECT_EQ(euler_characteristic(Q.table()), 0);
    EXPECT_FALSE(Q.any_stabilized());
    EXPECT_TRUE(verify_identities(Q.table(), 4).ok());
  }
}

TEST(Quotient, ThreeDimensionalQuotients) {
  const auto C = quotient(CrystallographicGroup(group(cube)));
  EXPECT_EQ(f_vector(C.table()), (std::vector<std::size_t>{1, 7, 12, 6}));
  const CrystallographicGroup S(group(screw));
  EXPECT_EQ(S.point_group().order(), 3u);
  EXPECT_EQ(S.translations().index(), 3);
  EXPECT_TRUE(S.is_fixed_point_free());
  const auto Q = quotient(S);
  EXPECT_EQ(euler_characteristic(Q.table()), 0);
  EXPECT_TRUE(verify_identities(Q.table(), 3).ok());
}

TEST(Quotient, CanonicalRepresentativeIsAnInvariant) {
  const CrystallographicGroup G(group(klein));
  std::mt19937_64 rng(5);
  const auto cells = oracle::nondegenerate_cells(2, -2, 2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const XiCell c = xi_cell_from_chain(cells[rng() % cells.size()]);
    GroupElement g = GroupElement::identity(2);
    for (int k = 0; k < 4; ++k) {
      const auto& [name, s] = G.presentation().generators[rng() % 2];
      g = compose(g, rng() % 2 ? s : invert(s));
    }
    EXPECT_EQ(G.canonical_orbit_rep(act(g, c)), G.canonical_orbit_rep(c));
  }
}
