#pragma once

#include "trivol/geometry.hpp"

#include <span>
#include <vector>

namespace trivol {

/// Vol(K + tL) = c0 + c1 t + c2 t^2 + c3 t^3 for t >= 0.
struct VolumeCubic {
  Rational c0, c1, c2, c3;

  Rational operator()(const Rational& t) const {
    return c0 + t * (c1 + t * (c2 + t * c3));
  }
  /// V(K, K, L)
  Rational v_kkl() const { return c1 / 3; }
  /// V(K, L, L)
  Rational v_kll() const { return c2 / 3; }

  friend bool operator==(const VolumeCubic&, const VolumeCubic&) = default;
};

/// V(P, P, K) = 1/3 sum over u in U(P) of h_K(u).
Rational mixed_volume_against(const Tetrahedron& p,
                              std::span<const Point3> k);

/// Same sum for an explicitly given set of area-scaled outer normals. This is
/// how flat limits of a tetrahedron, whose normals stay well defined, enter.
Rational mixed_volume_from_normals(std::span<const Vec3> normals,
                                   std::span<const Point3> k);

/// All pairwise sums, deduplicated and sorted.
std::vector<Point3> minkowski_sum_vertices(std::span<const Point3> k,
                                           std::span<const Point3> l);

/// Every point multiplied by `factor`.
std::vector<Point3> scaled(std::span<const Point3> points,
                           const Rational& factor);

/// Interpolates Vol(hull(K + tL)) at t = 0, 1, 2, 3 and solves the
/// Vandermonde system exactly. K + L must be full-dimensional (otherwise
/// DegenerateHull); a flat K contributes Vol(K) = 0 at the t = 0 node.
VolumeCubic volume_cubic(std::span<const Point3> k, std::span<const Point3> l);

}  // namespace trivol
