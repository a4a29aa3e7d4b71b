#include "trivol/geometry.hpp"

#include "trivol/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace trivol {

Rational det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rational det4(const Matrix4& m) {
  // Laplace expansion along the first row.
  Rational result = 0;
  for (int col = 0; col < 4; ++col) {
    if (m[0][col] == 0) continue;
    Matrix3 minor;
    for (int r = 1; r < 4; ++r) {
      int c2 = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == col) continue;
        minor[r - 1][c2++] = m[r][c];
      }
    }
    Rational term = m[0][col] * det3(minor);
    if (col % 2 == 0)
      result += term;
    else
      result -= term;
  }
  return result;
}

Vec3 operator+(const Vec3& u, const Vec3& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

Vec3 operator-(const Vec3& u, const Vec3& v) {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}

Vec3 operator*(const Rational& s, const Vec3& v) {
  return {s * v[0], s * v[1], s * v[2]};
}

Rational dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

Rational augmented_det(const Point3& a, const Point3& b, const Point3& c,
                       const Point3& d) {
  Matrix4 m;
  for (int r = 0; r < 3; ++r) m[r] = {a[r], b[r], c[r], d[r]};
  m[3] = {Rational(1), Rational(1), Rational(1), Rational(1)};
  return det4(m);
}

template <std::size_t N>
std::array<Rational, N> primitive_direction(const std::array<Rational, N>& v) {
  Integer den_lcm = 1;
  for (const auto& x : v)
    den_lcm = boost::multiprecision::lcm(den_lcm,
                                         boost::multiprecision::denominator(x));
  std::array<Integer, N> ints;
  Integer g = 0;
  for (std::size_t i = 0; i < N; ++i) {
    ints[i] = boost::multiprecision::numerator(v[i]) * (den_lcm /
              boost::multiprecision::denominator(v[i]));
    g = boost::multiprecision::gcd(g, ints[i]);
  }
  std::array<Rational, N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = g == 0 ? Rational(0) : Rational(ints[i] / abs(g));
  return out;
}

template std::array<Rational, 3> primitive_direction(
    const std::array<Rational, 3>&);
template std::array<Rational, 4> primitive_direction(
    const std::array<Rational, 4>&);

Tetrahedron Tetrahedron::orient(std::array<Point3, 4> v) {
  Rational d = augmented_det(v[0], v[1], v[2], v[3]);
  if (d == 0) throw DegenerateTetrahedron("vertices are coplanar");
  if (d < 0) std::swap(v[0], v[1]);
  return Tetrahedron(std::move(v));
}

namespace {

// D_i(p, q, r): determinant after deleting coordinate row i (0-based) from
// the 4x3 matrix [p q r; 1 1 1].
Rational cofactor_det(int deleted, const Point3& p, const Point3& q,
                      const Point3& r) {
  Matrix3 m;
  int row = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == deleted) continue;
    m[row++] = {p[i], q[i], r[i]};
  }
  m[2] = {Rational(1), Rational(1), Rational(1)};
  return det3(m);
}

Vec3 facet_normal(const Point3& p, const Point3& q, const Point3& r,
                  const Rational& sign) {
  Rational half = sign / 2;
  return {half * cofactor_det(0, p, q, r), -half * cofactor_det(1, p, q, r),
          half * cofactor_det(2, p, q, r)};
}

}  // namespace

FacetNormalSet facet_normal_set(const Tetrahedron& t) {
  const auto& [alpha, beta, gamma, delta] = t.vertices();
  return {{facet_normal(alpha, beta, gamma, 1),
           facet_normal(delta, alpha, beta, -1),
           facet_normal(gamma, delta, alpha, 1),
           facet_normal(beta, gamma, delta, -1)}};
}

Rational support(std::span<const Point3> vertices, const Vec3& u) {
  if (vertices.empty()) throw EmptyPolytope();
  Rational best = dot(vertices.front(), u);
  for (const auto& x : vertices.subspan(1)) best = std::max(best, dot(x, u));
  return best;
}

Rational tetra_volume(const Tetrahedron& t) {
  const auto& v = t.vertices();
  return augmented_det(v[0], v[1], v[2], v[3]) / 6;
}

std::vector<Point3> unique_points(std::span<const Point3> points) {
  std::vector<Point3> out(points.begin(), points.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

using Point2 = std::array<Rational, 2>;

Rational cross2(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Fan triangulation of a planar convex polygon given by (possibly
// non-vertex) points, from its lexicographically smallest point. Every edge
// line not through the apex contributes one triangle spanning the extreme
// points on that line.
std::vector<std::array<std::size_t, 3>> polygon_fan(
    std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  std::size_t apex = static_cast<std::size_t>(
      std::min_element(pts.begin(), pts.end()) - pts.begin());
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cross2(pts[i], pts[j], pts[apex]) == 0) continue;
      bool pos = false, neg = false;
      for (std::size_t k = 0; k < n && !(pos && neg); ++k) {
        Rational s = cross2(pts[i], pts[j], pts[k]);
        pos |= s > 0;
        neg |= s < 0;
      }
      if (pos && neg) continue;
      // Extreme points along the supporting line.
      Point2 dir = {pts[j][0] - pts[i][0], pts[j][1] - pts[i][1]};
      std::size_t lo = i, hi = i;
      Rational lo_t = 0, hi_t = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (cross2(pts[i], pts[j], pts[k]) != 0) continue;
        Rational t = dir[0] * (pts[k][0] - pts[i][0]) +
                     dir[1] * (pts[k][1] - pts[i][1]);
        if (t < lo_t) lo_t = t, lo = k;
        if (t > hi_t) hi_t = t, hi = k;
      }
      edges.emplace(std::min(lo, hi), std::max(lo, hi));
    }
  }
  std::vector<std::array<std::size_t, 3>> tris;
  tris.reserve(edges.size());
  for (const auto& [u, v] : edges) tris.push_back({apex, u, v});
  return tris;
}

}  // namespace

std::vector<HullFacet3> hull_facets_3d(std::span<const Point3> points) {
  const std::size_t n = points.size();
  if (n < 4) throw DegenerateHull("fewer than 4 distinct points");

  std::vector<HullFacet3> facets;
  std::set<Vec3> seen;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec3 e1 = points[j] - points[i];
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 normal = cross(e1, points[k] - points[i]);
        if (normal == Vec3{}) continue;
        Rational offset = dot(normal, points[i]);
        bool pos = false, neg = false;
        for (std::size_t m = 0; m < n && !(pos && neg); ++m) {
          Rational s = dot(normal, points[m]) - offset;
          pos |= s > 0;
          neg |= s < 0;
        }
        if (pos && neg) continue;
        if (!pos && !neg) throw DegenerateHull("points are coplanar");
        if (pos) normal = Rational(-1) * normal;
        normal = primitive_direction(normal);
        if (!seen.insert(normal).second) continue;

        HullFacet3 facet;
        facet.normal = normal;
        facet.offset = dot(normal, points[i]);
        for (std::size_t m = 0; m < n; ++m)
          if (dot(normal, points[m]) == facet.offset) facet.incident.push_back(m);

        // Dropping a coordinate with a nonzero normal component is an
        // affine bijection from the facet plane onto R^2.
        int drop = 0;
        while (normal[drop] == 0) ++drop;
        std::vector<Point2> flat;
        flat.reserve(facet.incident.size());
        for (std::size_t m : facet.incident) {
          Point2 p;
          int c = 0;
          for (int d = 0; d < 3; ++d)
            if (d != drop) p[c++] = points[m][d];
          flat.push_back(std::move(p));
        }
        for (const auto& tri : polygon_fan(flat))
          facet.triangles.push_back({facet.incident[tri[0]],
                                     facet.incident[tri[1]],
                                     facet.incident[tri[2]]});
        facets.push_back(std::move(facet));
      }
    }
  }
  if (facets.empty()) throw DegenerateHull("points are collinear");
  return facets;
}

std::vector<std::array<std::size_t, 4>> fan_triangulation_3d(
    std::span<const Point3> points, std::size_t apex) {
  std::vector<std::array<std::size_t, 4>> tets;
  for (const auto& facet : hull_facets_3d(points)) {
    if (dot(facet.normal, points[apex]) == facet.offset) continue;
    for (const auto& tri : facet.triangles)
      tets.push_back({apex, tri[0], tri[1], tri[2]});
  }
  return tets;
}

Rational hull_volume_3d(std::span<const Point3> points) {
  std::vector<Point3> pts = unique_points(points);
  auto facets = hull_facets_3d(pts);

  Point3 centroid{};
  for (const auto& p : pts) centroid = centroid + p;
  centroid = Rational(1) / Rational(pts.size()) * centroid;

  // The centroid is interior, so cones over boundary triangles tile the hull.
  Rational six_volume = 0;
  for (const auto& facet : facets) {
    for (const auto& [i, j, k] : facet.triangles) {
      Vec3 a = pts[i] - centroid, b = pts[j] - centroid, c = pts[k] - centroid;
      six_volume += abs(dot(a, cross(b, c)));
    }
  }
  return six_volume / 6;
}

}  // namespace trivol
