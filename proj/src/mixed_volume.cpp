#include "trivol/mixed_volume.hpp"

#include "trivol/errors.hpp"

#include <array>
#include <utility>

namespace trivol {

Rational mixed_volume_from_normals(std::span<const Vec3> normals,
                                   std::span<const Point3> k) {
  Rational sum = 0;
  for (const auto& u : normals) sum += support(k, u);
  return sum / 3;
}

Rational mixed_volume_against(const Tetrahedron& p,
                              std::span<const Point3> k) {
  return mixed_volume_from_normals(facet_normal_set(p).normals, k);
}

std::vector<Point3> minkowski_sum_vertices(std::span<const Point3> k,
                                           std::span<const Point3> l) {
  std::vector<Point3> sums;
  sums.reserve(k.size() * l.size());
  for (const auto& p : k)
    for (const auto& q : l) sums.push_back(p + q);
  return unique_points(sums);
}

std::vector<Point3> scaled(std::span<const Point3> points,
                           const Rational& factor) {
  std::vector<Point3> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(factor * p);
  return out;
}

namespace {

// Gauss-Jordan elimination on a nonsingular 4x4 system.
std::array<Rational, 4> solve4(std::array<std::array<Rational, 4>, 4> a,
                               std::array<Rational, 4> rhs) {
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<Rational, 4> x;
  for (int i = 0; i < 4; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

}  // namespace

VolumeCubic volume_cubic(std::span<const Point3> k, std::span<const Point3> l) {
  if (k.empty() || l.empty()) throw EmptyPolytope();
  // Nodes t = 0, 1, 2, 3.
  std::array<Rational, 4> values;
  std::array<std::array<Rational, 4>, 4> vandermonde;
  for (int t = 0; t < 4; ++t) {
    Rational node(t);
    vandermonde[t] = {Rational(1), node, node * node, node * node * node};
    if (t == 0) {
      try {
        values[t] = hull_volume_3d(k);
      } catch (const DegenerateHull&) {
        values[t] = 0;
      }
    } else {
      values[t] = hull_volume_3d(minkowski_sum_vertices(k, scaled(l, node)));
    }
  }
  auto c = solve4(vandermonde, values);
  return {c[0], c[1], c[2], c[3]};
}

}  // namespace trivol
