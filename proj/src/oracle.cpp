#include "trivol/oracle.hpp"

#include "trivol/errors.hpp"
#include "trivol/mixed_volume.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace trivol {

namespace {

Vec4 sub4(const Point4& p, const Point4& q) {
  return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]};
}

Rational dot4(const Vec4& u, const Vec4& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

// Vector orthogonal to e1, e2, e3: signed 3x3 minors of the 3x4 matrix.
Vec4 normal_of(const Vec4& e1, const Vec4& e2, const Vec4& e3) {
  Vec4 n;
  for (int drop = 0; drop < 4; ++drop) {
    Matrix3 m;
    for (int r = 0; r < 3; ++r) {
      const Vec4& e = r == 0 ? e1 : (r == 1 ? e2 : e3);
      int c = 0;
      for (int k = 0; k < 4; ++k)
        if (k != drop) m[r][c++] = e[k];
    }
    n[drop] = drop % 2 == 0 ? det3(m) : Rational(-det3(m));
  }
  return n;
}

using HyperplaneKey = std::pair<Vec4, Rational>;

// Primitive normal with positive leading nonzero entry, plus the matching
// offset; equal for coincident hyperplanes regardless of orientation.
HyperplaneKey hyperplane_key(const Vec4& primitive, const Rational& offset) {
  auto lead = std::find_if(primitive.begin(), primitive.end(),
                           [](const Rational& x) { return x != 0; });
  if (*lead > 0) return {primitive, offset};
  return {{-primitive[0], -primitive[1], -primitive[2], -primitive[3]}, -offset};
}

}  // namespace

Hull4 hull_4d(std::span<const Point4> input) {
  Hull4 hull;
  hull.points.assign(input.begin(), input.end());
  std::sort(hull.points.begin(), hull.points.end());
  hull.points.erase(std::unique(hull.points.begin(), hull.points.end()),
                    hull.points.end());
  const auto& pts = hull.points;
  const std::size_t n = pts.size();
  if (n < 5) throw DegenerateHull("fewer than 5 distinct points");

  std::set<HyperplaneKey> seen;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          Vec4 normal = normal_of(sub4(pts[j], pts[i]), sub4(pts[k], pts[i]),
                                  sub4(pts[l], pts[i]));
          if (normal == Vec4{}) continue;
          Rational offset = dot4(normal, pts[i]);
          bool pos = false, neg = false;
          for (std::size_t m = 0; m < n && !(pos && neg); ++m) {
            Rational s = dot4(normal, pts[m]) - offset;
            pos |= s > 0;
            neg |= s < 0;
          }
          if (pos && neg) continue;
          if (!pos && !neg)
            throw DegenerateHull("points lie in a hyperplane");
          if (pos)
            normal = {-normal[0], -normal[1], -normal[2], -normal[3]};
          normal = primitive_direction(normal);
          Facet4 facet{normal, dot4(normal, pts[i]), {}};
          if (!seen.insert(hyperplane_key(normal, facet.offset)).second) continue;

          for (std::size_t m = 0; m < n; ++m)
            if (dot4(normal, pts[m]) == facet.offset)
              facet.incident.push_back(m);
          hull.facets.push_back(std::move(facet));
        }
  if (hull.facets.empty())
    throw DegenerateHull("points span less than a hyperplane");
  std::sort(hull.facets.begin(), hull.facets.end(),
            [](const Facet4& x, const Facet4& y) { return x.normal < y.normal; });
  return hull;
}

Rational hull_volume_4d(std::span<const Point4> points) {
  const Hull4 hull = hull_4d(points);
  const auto& pts = hull.points;

  Point4 centroid{};
  for (const auto& p : pts)
    for (int c = 0; c < 4; ++c) centroid[c] += p[c];
  for (auto& c : centroid) c /= Rational(pts.size());

  Rational volume24 = 0;
  for (const auto& facet : hull.facets) {
    // Dropping a coordinate where the normal is nonzero maps the facet
    // hyperplane bijectively and affinely onto R^3.
    int drop = 0;
    while (facet.normal[drop] == 0) ++drop;
    std::vector<Point3> flat;
    flat.reserve(facet.incident.size());
    for (std::size_t m : facet.incident) {
      Point3 p;
      int c = 0;
      for (int d = 0; d < 4; ++d)
        if (d != drop) p[c++] = pts[m][d];
      flat.push_back(std::move(p));
    }
    // Points are sorted, so the first incident one is lexicographically
    // smallest on the facet.
    for (const auto& tet : fan_triangulation_3d(flat, 0)) {
      Matrix4 m;
      for (int r = 0; r < 4; ++r) {
        Vec4 e = sub4(pts[facet.incident[tet[r]]], centroid);
        m[r] = e;
      }
      volume24 += abs(det4(m));
    }
  }
  return volume24 / 24;
}

Rational cross_section_volume(const Box3Bounds& box, const Rational& t) {
  validate(box);
  const Rational& a3 = box.a[2];
  const Rational& b3 = box.b[2];
  if (t < a3 || t > b3)
    throw InvalidBounds("slice position " + to_string(t) + " outside [" +
                        to_string(a3) + ", " + to_string(b3) + "]");

  std::vector<Point3> lower, upper;
  for (const auto& p : extreme_points(box)) {
    Point3 projected{p[0], p[1], p[2]};
    (p[3] == a3 ? lower : upper).push_back(std::move(projected));
  }
  const Rational width = b3 - a3;
  auto section = minkowski_sum_vertices(scaled(lower, (b3 - t) / width),
                                        scaled(upper, (t - a3) / width));
  try {
    return hull_volume_3d(section);
  } catch (const DegenerateHull&) {
    if (t == a3 || t == b3) return 0;
    throw;
  }
}

Rational quadrature_volume(const Box3Bounds& box) {
  validate(box);
  const Rational& a3 = box.a[2];
  const Rational& b3 = box.b[2];
  return (b3 - a3) / 6 *
         (cross_section_volume(box, a3) +
          4 * cross_section_volume(box, (a3 + b3) / 2) +
          cross_section_volume(box, b3));
}

MonteCarloEstimate monte_carlo_volume(std::span<const Point4> points,
                                      std::uint64_t samples,
                                      std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  const Hull4 hull = hull_4d(points);

  std::array<double, 4> lo, hi;
  for (int c = 0; c < 4; ++c) {
    lo[c] = hi[c] = hull.points.front()[c].convert_to<double>();
    for (const auto& p : hull.points) {
      lo[c] = std::min(lo[c], p[c].convert_to<double>());
      hi[c] = std::max(hi[c], p[c].convert_to<double>());
    }
  }
  struct Halfspace {
    std::array<double, 4> normal;
    double offset;
  };
  std::vector<Halfspace> halfspaces;
  for (const auto& f : hull.facets) {
    Halfspace h;
    for (int c = 0; c < 4; ++c) h.normal[c] = f.normal[c].convert_to<double>();
    h.offset = f.offset.convert_to<double>();
    halfspaces.push_back(h);
  }

  constexpr std::uint64_t kBlock = 1 << 16;
  std::uint64_t hits = 0;
  for (std::uint64_t start = 0, block = 0; start < samples;
       start += kBlock, ++block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block),
                      static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    const std::uint64_t count = std::min(kBlock, samples - start);
    for (std::uint64_t s = 0; s < count; ++s) {
      std::array<double, 4> x;
      for (int c = 0; c < 4; ++c) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        x[c] = lo[c] + u * (hi[c] - lo[c]);
      }
      bool inside = true;
      for (const auto& h : halfspaces) {
        double s2 = h.normal[0] * x[0] + h.normal[1] * x[1] +
                    h.normal[2] * x[2] + h.normal[3] * x[3];
        if (s2 > h.offset) {
          inside = false;
          break;
        }
      }
      hits += inside;
    }
  }

  double box_volume = 1;
  for (int c = 0; c < 4; ++c) box_volume *= hi[c] - lo[c];
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  return {box_volume * p, box_volume * std::sqrt(p * (1 - p) / n)};
}

}  // namespace trivol
