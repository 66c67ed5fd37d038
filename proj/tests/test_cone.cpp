#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ditri/ditri.hpp"
#include "oracles/cone_oracle.hpp"
#include "support.hpp"

using namespace ditri;
using testing_support::to_q;

namespace {

RVector vec(std::initializer_list<long> xs) {
  RVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalCone cone(int n, std::initializer_list<std::initializer_list<long>> rays) {
  std::vector<RVector> rs;
  for (const auto& r : rays) rs.push_back(vec(r));
  return RationalCone(n, rs);
}

RationalCone lorentz_octagon() {
  return cone(3, {{5, 3, 4}, {5, 4, 3}, {5, 4, -3}, {5, 3, -4}, {5, -3, -4}, {5, -4, -3}, {5, -4, 3}, {5, -3, 4}});
}

// Rays in the open half-space x_0 + ... + x_{n-1} > 0, so the cone is pointed.
std::vector<RVector> random_pointed_rays(std::mt19937_64& rng, int n, int count) {
  std::vector<RVector> rays;
  while (static_cast<int>(rays.size()) < count) {
    RVector r;
    long sum = 0;
    for (int i = 0; i < n; ++i) {
      const long x = static_cast<long>(rng() % 7) - 2;
      sum += x;
      r.emplace_back(x);
    }
    if (sum > 0) rays.push_back(r);
  }
  return rays;
}

std::vector<oracle::QVector> to_q(const std::vector<IntegerRay>& rays) {
  std::vector<oracle::QVector> out;
  for (const auto& r : rays) out.push_back(testing_support::to_q(to_rational(r)));
  return out;
}

}  // namespace

TEST(Ray, PrimitiveKeepsDirectionAndSign) {
  EXPECT_EQ(primitive_ray({Rational(2, 3), Rational(4, 3)}), (IntegerRay{1, 2}));
  EXPECT_EQ(primitive_ray(vec({-2, -4})), (IntegerRay{-1, -2}));
  EXPECT_EQ(primitive_ray(vec({0, 6, -9})), (IntegerRay{0, 2, -3}));
}

TEST(Cone, RejectsZeroAndWrongLengthRays) {
  EXPECT_THROW(cone(2, {{0, 0}}), InvalidPresentation);
  EXPECT_THROW(cone(2, {{1, 0, 0}}), DimensionMismatch);
  EXPECT_EQ(cone(2, {{1, 0}, {3, 0}, {0, 2}}).rays().size(), 2u);
}

TEST(Cone, Orthant) {
  const auto r = check_cone(RationalCone::orthant(3));
  EXPECT_TRUE(r.generating);
  EXPECT_TRUE(r.free);
  EXPECT_EQ(r.extremal_rays.size(), 3u);
}

TEST(Cone, LorentzOctagonIsGeneratingButNotFree) {
  const auto r = check_cone(lorentz_octagon());
  EXPECT_TRUE(r.generating);
  EXPECT_FALSE(r.free);
  EXPECT_EQ(r.extremal_rays.size(), 8u);
  EXPECT_TRUE(contains(lorentz_octagon(), vec({1, 0, 0})));
  EXPECT_FALSE(contains(lorentz_octagon(), vec({1, 1, 0})));
  EXPECT_TRUE(contains(lorentz_octagon(), vec({5, 0, 4})));
}

TEST(Cone, DiagonalRayDoesNotGenerate) {
  const auto r = check_cone(cone(2, {{1, 1}}));
  EXPECT_FALSE(r.generating);
  EXPECT_TRUE(r.free);
  EXPECT_EQ(r.span_rank, 1u);
}

TEST(Cone, RedundantRayIsDropped) {
  const auto r = check_cone(cone(2, {{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(r.extremal_rays, (std::vector<IntegerRay>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(r.free);
}

TEST(Cone, ContainsRejectsWrongLength) {
  EXPECT_THROW(contains(RationalCone::orthant(2), vec({1})), DimensionMismatch);
}

// Extremal rays, freeness, generation and membership against Caratheodory enumeration.
TEST(Cone, RandomPointedConesMatchCaratheodory) {
  std::mt19937_64 rng(17);
  int not_free = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int count = 1 + static_cast<int>(rng() % 6);
    const RationalCone C(n, random_pointed_rays(rng, n, count));
    const auto rays = to_q(C.rays());
    const auto expect = oracle::judge(rays, static_cast<std::size_t>(n));
    const auto r = check_cone(C);
    EXPECT_EQ(r.generating, expect.generating);
    EXPECT_EQ(r.free, expect.free);
    EXPECT_EQ(r.extremal_rays.size(), expect.extremal);
    not_free += r.free ? 0 : 1;
    for (int probe = 0; probe < 10; ++probe) {
      RVector v;
      for (int i = 0; i < n; ++i) v.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      EXPECT_EQ(contains(C, v), oracle::in_cone(rays, to_q(v)));
    }
  }
  EXPECT_GT(not_free, 10);
}

TEST(Linalg, SolveAndRank) {
  const RMatrix A{vec({1, 2}), vec({2, 4})};
  EXPECT_EQ(rank(A), 1u);
  EXPECT_FALSE(solve(A, vec({1, 1})).has_value());
  const auto x = solve(A, vec({3, 6}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + 2 * (*x)[1], 3);
}

TEST(Isometry, EveryPermutationFactors) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    int seen = 0;
    do {
      const auto p = Permutation::from_images(img);
      const RMatrix A = permutation_matrix(p);
      RVector t;
      for (int i = 0; i < n; ++i) t.emplace_back(static_cast<long>(rng() % 21) - 10);
      const auto iso = factor_conal_isometry(A, t);
      EXPECT_EQ(iso.perm, p);
      EXPECT_EQ(iso.translation, t);
      for (int probe = 0; probe < 5; ++probe) {
        RVector x;
        for (int i = 0; i < n; ++i) x.emplace_back(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
        EXPECT_EQ(iso(x), apply_affine(A, t, x));
      }
      ++seen;
    } while (std::next_permutation(img.begin(), img.end()));
    EXPECT_EQ(seen, n == 1 ? 1 : n == 2 ? 2 : 6);
  }
}

TEST(Isometry, RotationIsNotConePreserving) {
  const RMatrix rot{vec({0, -1}), vec({1, 0})};
  try {
    factor_conal_isometry(rot, vec({0, 0}));
    FAIL() << "rotation accepted";
  } catch (const NotConePreserving& e) {
    EXPECT_EQ(e.column(), 1u);
  }
  EXPECT_THROW(factor_conal_isometry({vec({-1, 0}), vec({0, 1})}, vec({0, 0})), NotConePreserving);
}

TEST(Isometry, ShearAndScalingAreNotOrthogonal) {
  EXPECT_THROW(factor_conal_isometry({vec({1, 1}), vec({0, 1})}, vec({0, 0})), NotOrthogonal);
  EXPECT_THROW(factor_conal_isometry({vec({2, 0}), vec({0, 1})}, vec({0, 0})), NotOrthogonal);
  const RMatrix rational_rotation{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
  EXPECT_THROW(factor_conal_isometry(rational_rotation, vec({0, 0})), NotConePreserving);
}

TEST(Isometry, ShapesAreChecked) {
  EXPECT_THROW(factor_conal_isometry({vec({1, 0}), vec({0})}, vec({0, 0})), DimensionMismatch);
  EXPECT_THROW(factor_conal_isometry({vec({1, 0}), vec({0, 1})}, vec({0})), DimensionMismatch);
}

TEST(Triangulability, Verdicts) {
  std::istringstream in("dim 2\ngen a perm 2 1 trans 1 0\ngen b perm 2 1 trans 0 1\n");
  const auto klein = io::parse_group(in);
  const auto v = triangulability_decision(
      std::vector<Component>{{RationalCone::orthant(2), klein}, {lorentz_octagon(), std::nullopt},
                             {cone(2, {{1, 1}}), std::nullopt}});
  ASSERT_EQ(v.size(), 3u);
  EXPECT_TRUE(v[0].triangulable);
  ASSERT_TRUE(v[0].witness.has_value());
  EXPECT_EQ(v[0].witness->f_vector, (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(v[0].witness->euler, 0);
  EXPECT_TRUE(v[0].witness->fixed_point_free);
  EXPECT_FALSE(v[1].triangulable);
  EXPECT_FALSE(v[1].cone.free);
  EXPECT_FALSE(v[2].triangulable);
  EXPECT_FALSE(v[2].cone.generating);
  EXPECT_FALSE(v[2].witness.has_value());
  EXPECT_THROW(triangulability_decision(Component{RationalCone::orthant(3), klein}), DimensionMismatch);
}
