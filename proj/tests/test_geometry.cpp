#include "trivol/errors.hpp"
#include "trivol/geometry.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace trivol {
namespace {

using test::R;

// Leibniz permutation sum, independent of the cofactor expansion.
template <std::size_t N>
Rational leibniz_det(const std::array<std::array<Rational, N>, N>& m) {
  std::array<int, N> perm;
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < N; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <std::size_t N>
std::array<std::array<Rational, N>, N> random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::array<std::array<Rational, N>, N> m;
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

const Point3 kOrigin{R(0), R(0), R(0)};
const Point3 kE1{R(1), R(0), R(0)};
const Point3 kE2{R(0), R(1), R(0)};
const Point3 kE3{R(0), R(0), R(1)};

std::vector<Point3> cube_points(long lo, long hi) {
  std::vector<Point3> pts;
  for (long x : {lo, hi})
    for (long y : {lo, hi})
      for (long z : {lo, hi}) pts.push_back({R(x), R(y), R(z)});
  return pts;
}

TEST(Determinant, ThreeByThree) {
  Matrix3 id{{{R(1), R(0), R(0)}, {R(0), R(1), R(0)}, {R(0), R(0), R(1)}}};
  EXPECT_EQ(det3(id), 1);
  Matrix3 equal_rows{{{R(1), R(2), R(3)}, {R(1), R(2), R(3)}, {R(4), R(5), R(7)}}};
  EXPECT_EQ(det3(equal_rows), 0);
  Matrix3 m{{{R(1), R(2), R(3)}, {R(0), R(1), R(4)}, {R(5), R(6), R(0)}}};
  EXPECT_EQ(leibniz_det(m), 1);
  EXPECT_EQ(det3(m), 1);
}

TEST(Determinant, FourByFour) {
  Matrix4 id{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) id[i][j] = i == j ? 1 : 0;
  EXPECT_EQ(det4(id), 1);

  // Single transposition of rows 1 and 3.
  Matrix4 odd = id;
  std::swap(odd[1], odd[3]);
  EXPECT_EQ(det4(odd), -1);

  // Simplex 0, e1, e2, e3 as columns, ones row on top: upper triangular.
  Matrix4 lifted{{{R(1), R(1), R(1), R(1)},
                  {R(0), R(1), R(0), R(0)},
                  {R(0), R(0), R(1), R(0)},
                  {R(0), R(0), R(0), R(1)}}};
  EXPECT_EQ(det4(lifted), 1);
  // With the ones row at the bottom the four rows are cycled once: three
  // transpositions, so the sign flips.
  EXPECT_EQ(augmented_det(kOrigin, kE1, kE2, kE3), -1);
}

TEST(Determinant, AgreesWithPermutationExpansion) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    auto m3 = random_matrix<3>(rng);
    EXPECT_EQ(det3(m3), leibniz_det(m3));
    auto m4 = random_matrix<4>(rng);
    EXPECT_EQ(det4(m4), leibniz_det(m4));
  }
}

TEST(Orient, SwapsFirstTwoWhenNegative) {
  auto t = Tetrahedron::orient({kOrigin, kE1, kE2, kE3});
  EXPECT_EQ(t.vertices(), (std::array<Point3, 4>{kE1, kOrigin, kE2, kE3}));

  auto u = Tetrahedron::orient({kE1, kOrigin, kE2, kE3});
  EXPECT_EQ(u.vertices(), (std::array<Point3, 4>{kE1, kOrigin, kE2, kE3}));
  EXPECT_GT(augmented_det(kE1, kOrigin, kE2, kE3), 0);
}

TEST(Orient, CoplanarThrows) {
  Point3 p{R(1), R(1), R(0)};
  EXPECT_THROW(Tetrahedron::orient({kOrigin, kE1, kE2, p}),
               DegenerateTetrahedron);
}

TEST(FacetNormals, StandardSimplex) {
  auto normals = facet_normal_set(Tetrahedron::orient({kOrigin, kE1, kE2, kE3}));
  std::array<Vec3, 4> expected{{{R(0), R(0), R(-1, 2)},
                                {R(0), R(-1, 2), R(0)},
                                {R(-1, 2), R(0), R(0)},
                                {R(1, 2), R(1, 2), R(1, 2)}}};
  EXPECT_EQ(test::sorted(normals.normals), test::sorted(expected));
}

TEST(FacetNormals, TetrahedronQOfUnitOffsetBox) {
  // Q for a = (1,1,1), b = (2,2,2), coordinates (y, x1, x2).
  auto q = Tetrahedron::orient(
      {Point3{R(4), R(2), R(2)}, Point3{R(1), R(1), R(1)},
       Point3{R(2), R(2), R(1)}, Point3{R(2), R(1), R(2)}});
  std::array<Vec3, 4> expected{{{R(1, 2), R(-1, 2), R(-1)},
                                {R(1, 2), R(-1), R(-1, 2)},
                                {R(-1, 2), R(1), R(1)},
                                {R(-1, 2), R(1, 2), R(1, 2)}}};
  EXPECT_EQ(test::sorted(facet_normal_set(q).normals), test::sorted(expected));
}

// Every normal is outward, orthogonal to its facet, and as long as the facet
// is large; together they close up.
TEST(FacetNormals, PropertiesOnRandomTetrahedra) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    auto pts = test::random_tetra_points(rng);
    auto t = Tetrahedron::orient(pts);
    auto normals = facet_normal_set(t).normals;

    Vec3 sum{};
    for (const auto& u : normals) sum = sum + u;
    EXPECT_EQ(sum, Vec3{});

    const auto& v = t.vertices();
    for (const auto& u : normals) {
      // Find the facet: the three vertices maximizing u.x all tie.
      Rational top = support(t.points(), u);
      std::vector<Point3> facet;
      for (const auto& p : v)
        if (dot(p, u) == top) facet.push_back(p);
      ASSERT_EQ(facet.size(), 3u);
      Vec3 doubled = cross(facet[1] - facet[0], facet[2] - facet[0]);
      EXPECT_EQ(4 * dot(u, u), dot(doubled, doubled));
    }

    // Translation and even permutations leave the set unchanged.
    Vec3 shift = test::random_point3(rng);
    auto moved = Tetrahedron::orient(
        {v[0] + shift, v[1] + shift, v[2] + shift, v[3] + shift});
    EXPECT_EQ(test::sorted(facet_normal_set(moved).normals), test::sorted(normals));
    auto cycled = Tetrahedron::orient({v[1], v[2], v[0], v[3]});
    EXPECT_EQ(cycled.vertices()[0], v[1]);
    EXPECT_EQ(test::sorted(facet_normal_set(cycled).normals), test::sorted(normals));
    auto double_swap = Tetrahedron::orient({v[1], v[0], v[3], v[2]});
    EXPECT_EQ(test::sorted(facet_normal_set(double_swap).normals),
              test::sorted(normals));
  }
}

TEST(Support, Examples) {
  EXPECT_EQ(support(cube_points(0, 1), {R(1), R(1), R(1)}), 3);

  std::vector<Point3> octahedron{{R(1), R(0), R(0)},  {R(-1), R(0), R(0)},
                                 {R(0), R(1), R(0)},  {R(0), R(-1), R(0)},
                                 {R(0), R(0), R(1)},  {R(0), R(0), R(-1)}};
  EXPECT_EQ(support(octahedron, {R(2), R(-5), R(1)}), 5);

  // Q for a = (1,1,1), b = (2,2,2): three vertices tie at -2, the fourth gives -3.
  std::vector<Point3> q{{R(4), R(2), R(2)}, {R(1), R(1), R(1)},
                        {R(2), R(2), R(1)}, {R(2), R(1), R(2)}};
  EXPECT_EQ(support(q, {R(1), R(-1), R(-2)}), -2);

  EXPECT_THROW(support(std::vector<Point3>{}, {R(1), R(0), R(0)}), EmptyPolytope);
}

TEST(Support, PositivelyHomogeneous) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    auto pts = test::random_tetra_points(rng);
    Vec3 u = test::random_point3(rng);
    Rational lambda = R(std::uniform_int_distribution<int>(0, 20)(rng), 7);
    EXPECT_EQ(support(pts, lambda * u), lambda * support(pts, u));
  }
}

TEST(TetraVolume, Examples) {
  EXPECT_EQ(tetra_volume(Tetrahedron::orient({kOrigin, kE1, kE2, kE3})), R(1, 6));
  // Q for a = (0,0,a3), b = (1,1,b3) has vertices (a3 x1 x2, x1, x2).
  for (long a3 : {1, 2, 7}) {
    auto q = Tetrahedron::orient({Point3{R(a3), R(1), R(1)},
                                  Point3{R(0), R(0), R(0)},
                                  Point3{R(0), R(1), R(0)},
                                  Point3{R(0), R(0), R(1)}});
    EXPECT_EQ(tetra_volume(q), R(a3, 6));
  }
}

TEST(TetraVolume, MatchesHullVolume) {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 100; ++n) {
    auto pts = test::random_tetra_points(rng);
    auto t = Tetrahedron::orient(pts);
    EXPECT_GT(tetra_volume(t), 0);
    EXPECT_EQ(tetra_volume(t), hull_volume_3d(pts));
  }
}

TEST(HullVolume3d, Examples) {
  EXPECT_EQ(hull_volume_3d(cube_points(0, 1)), 1);
  EXPECT_EQ(hull_volume_3d(std::vector<Point3>{kOrigin, kE1, kE2, kE3}), R(1, 6));

  // [-1,1]^3 plus the unit octahedron; coordinates with one entry in
  // {-2, 0, 2} and the others +-1.
  std::vector<Point3> sum;
  for (const auto& c : cube_points(-1, 1))
    for (int axis = 0; axis < 3; ++axis)
      for (long s : {-1, 1}) {
        Point3 p = c;
        p[axis] += s;
        sum.push_back(p);
      }
  EXPECT_EQ(sum.size(), 48u);
  EXPECT_EQ(hull_volume_3d(sum), R(136, 3));
}

TEST(HullVolume3d, InteriorAndDuplicatePointsIgnored) {
  auto pts = cube_points(0, 2);
  pts.push_back({R(1), R(1), R(1)});  // interior
  pts.push_back({R(1), R(1), R(0)});  // face center
  pts.push_back({R(1), R(0), R(0)});  // edge midpoint
  pts.push_back(pts.front());
  EXPECT_EQ(hull_volume_3d(pts), 8);
}

TEST(HullVolume3d, DegenerateInputsThrow) {
  std::vector<Point3> square{kOrigin, kE1, kE2, {R(1), R(1), R(0)}};
  EXPECT_THROW(hull_volume_3d(square), DegenerateHull);
  std::vector<Point3> line{kOrigin, kE1, {R(2), R(0), R(0)}, {R(3), R(0), R(0)}};
  EXPECT_THROW(hull_volume_3d(line), DegenerateHull);
  EXPECT_THROW(hull_volume_3d(std::vector<Point3>{kOrigin, kE1, kE2}),
               DegenerateHull);
}

TEST(HullFacets3d, CubeHasSixPrimitiveFacets) {
  auto facets = hull_facets_3d(unique_points(cube_points(0, 3)));
  ASSERT_EQ(facets.size(), 6u);
  for (const auto& f : facets) {
    EXPECT_EQ(f.incident.size(), 4u);
    EXPECT_EQ(f.triangles.size(), 2u);
    EXPECT_EQ(dot(f.normal, f.normal), 1);
  }
}

TEST(PrimitiveDirection, ScalesToCoprimeIntegers) {
  std::array<Rational, 3> v{R(3, 4), R(-3, 2), R(0)};
  EXPECT_EQ(primitive_direction(v), (std::array<Rational, 3>{R(1), R(-2), R(0)}));
  std::array<Rational, 3> zero{};
  EXPECT_EQ(primitive_direction(zero), zero);
}

}  // namespace
}  // namespace trivol
