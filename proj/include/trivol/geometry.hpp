#pragma once

#include "trivol/rational.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace trivol {

using Vec3 = std::array<Rational, 3>;
using Point3 = Vec3;
/// Points of the graph space, ordered (y, x1, x2, x3).
using Vec4 = std::array<Rational, 4>;
using Point4 = Vec4;

using Matrix3 = std::array<std::array<Rational, 3>, 3>;
using Matrix4 = std::array<std::array<Rational, 4>, 4>;

Rational det3(const Matrix3& m);
Rational det4(const Matrix4& m);

Vec3 operator+(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u, const Vec3& v);
Vec3 operator*(const Rational& s, const Vec3& v);
Rational dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);

/// det of the 4x4 matrix whose columns are the four points, with a row of
/// ones appended at the bottom.
Rational augmented_det(const Point3& a, const Point3& b, const Point3& c,
                       const Point3& d);

/// Positive multiple of `v` with coprime integer entries. Zero stays zero.
template <std::size_t N>
std::array<Rational, N> primitive_direction(const std::array<Rational, N>& v);

extern template std::array<Rational, 3> primitive_direction(
    const std::array<Rational, 3>&);
extern template std::array<Rational, 4> primitive_direction(
    const std::array<Rational, 4>&);

/// Four affinely independent points with augmented_det > 0.
class Tetrahedron {
 public:
  /// Swaps the first two vertices when the determinant is negative.
  /// Throws DegenerateTetrahedron when it is zero.
  static Tetrahedron orient(std::array<Point3, 4> vertices);

  const std::array<Point3, 4>& vertices() const { return vertices_; }
  std::span<const Point3> points() const { return vertices_; }

 private:
  explicit Tetrahedron(std::array<Point3, 4> v) : vertices_(std::move(v)) {}
  std::array<Point3, 4> vertices_;
};

/// Outer facet normals, each scaled to the area of its facet.
struct FacetNormalSet {
  std::array<Vec3, 4> normals;
};

/// Cofactor construction: the normal of facet (p, q, r) is
/// 1/2 (D1, -D2, D3)(p, q, r), where Di deletes row i of [p q r; 1 1 1],
/// with alternating signs over the cyclic facet triples.
FacetNormalSet facet_normal_set(const Tetrahedron& t);

/// Support function h(u) = max over the points of x.u. Throws EmptyPolytope.
Rational support(std::span<const Point3> vertices, const Vec3& u);

Rational tetra_volume(const Tetrahedron& t);

/// Sorted copy without duplicates.
std::vector<Point3> unique_points(std::span<const Point3> points);

/// One facet of a 3D hull, with a fan triangulation of its polygon.
struct HullFacet3 {
  Vec3 normal;  // outward, primitive integer
  Rational offset;
  std::vector<std::size_t> incident;
  std::vector<std::array<std::size_t, 3>> triangles;
};

/// Brute-force facet enumeration over all point triples. `points` must be
/// free of duplicates; indices refer into it. Throws DegenerateHull when the
/// points do not span R^3.
std::vector<HullFacet3> hull_facets_3d(std::span<const Point3> points);

/// Triangulation of the hull obtained by coning from `apex` (which must be a
/// hull vertex) over every boundary triangle not on a facet through it.
std::vector<std::array<std::size_t, 4>> fan_triangulation_3d(
    std::span<const Point3> points, std::size_t apex);

/// Exact volume of the convex hull. Duplicates are ignored. Throws
/// DegenerateHull when the hull is flat.
Rational hull_volume_3d(std::span<const Point3> points);

}  // namespace trivol
