#pragma once

#include "trivol/geometry.hpp"
#include "trivol/trilinear_hull.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

namespace trivol::test {

inline Rational R(long num, long den = 1) { return Rational(num) / den; }

inline Box3Bounds box(std::array<long, 3> a, std::array<long, 3> b) {
  return {{R(a[0]), R(a[1]), R(a[2])}, {R(b[0]), R(b[1]), R(b[2])}};
}

inline Point3 random_point3(std::mt19937_64& rng, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> d(lo, hi);
  return {R(d(rng)), R(d(rng)), R(d(rng))};
}

/// A random non-degenerate tetrahedron with small integer coordinates.
inline std::array<Point3, 4> random_tetra_points(std::mt19937_64& rng) {
  while (true) {
    std::array<Point3, 4> v;
    for (auto& p : v) p = random_point3(rng);
    if (augmented_det(v[0], v[1], v[2], v[3]) != 0) return v;
  }
}

/// Random bounds 0 <= a_i < b_i <= max_bound, not relabeled.
inline Box3Bounds random_box(std::mt19937_64& rng, int max_bound = 10) {
  Box3Bounds out;
  for (int i = 0; i < 3; ++i) {
    int a = std::uniform_int_distribution<int>(0, max_bound - 1)(rng);
    int b = std::uniform_int_distribution<int>(a + 1, max_bound)(rng);
    out.a[i] = a;
    out.b[i] = b;
  }
  return out;
}

/// Random box whose relabeled lower bound a3 is positive.
inline Box3Bounds random_box_positive_a3(std::mt19937_64& rng,
                                         int max_bound = 10) {
  while (true) {
    Box3Bounds b = random_box(rng, max_bound);
    if (omega_normalize(b).bounds.a[2] > 0) return b;
  }
}

template <typename T, std::size_t N>
std::vector<T> sorted(const std::array<T, N>& items) {
  std::vector<T> v(items.begin(), items.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace trivol::test
