#pragma once

// Brute-force checks that share no code with the mixed-volume route.

#include "trivol/geometry.hpp"
#include "trivol/trilinear_hull.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace trivol {

struct Facet4 {
  /// Outward, coprime integer entries: every hull point x has normal.x <= offset.
  Vec4 normal;
  Rational offset;
  /// Indices into Hull4::points of the points on the facet.
  std::vector<std::size_t> incident;

  friend bool operator==(const Facet4&, const Facet4&) = default;
};

struct Hull4 {
  /// Input points, sorted and deduplicated.
  std::vector<Point4> points;
  /// Sorted by normal.
  std::vector<Facet4> facets;
};

/// Enumerates every 4-subset of the points, keeps supporting hyperplanes and
/// merges coincident ones. Throws DegenerateHull when the points lie in a
/// hyperplane.
Hull4 hull_4d(std::span<const Point4> points);

/// Exact 4-volume: each facet is fanned from its lexicographically smallest
/// vertex and every resulting tetrahedron is coned to the centroid.
Rational hull_volume_4d(std::span<const Point4> points);

/// 3-volume of the slice of the hull of the graph at x3 = t, built as the
/// Minkowski combination of the two levels x3 = a3 and x3 = b3. Slices at the
/// ends that are flat have volume 0. Throws InvalidBounds for t outside
/// [a3, b3].
Rational cross_section_volume(const Box3Bounds& box, const Rational& t);

/// Simpson's rule on the slice volumes at a3, (a3+b3)/2 and b3. Exact since
/// the slice volume is a cubic in t.
Rational quadrature_volume(const Box3Bounds& box);

struct MonteCarloEstimate {
  double estimate;
  double std_error;
};

/// Rejection sampling in the bounding box of the points. Sample blocks use
/// independently seeded generators, so the result depends only on
/// (points, samples, seed).
MonteCarloEstimate monte_carlo_volume(std::span<const Point4> points,
                                      std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace trivol
