#pragma once

#include "trivol/geometry.hpp"

#include <array>
#include <optional>

namespace trivol {

/// Bounds a_i <= x_i <= b_i of the three variables (index 0 is x1).
struct Box3Bounds {
  std::array<Rational, 3> a;
  std::array<Rational, 3> b;

  friend bool operator==(const Box3Bounds&, const Box3Bounds&) = default;
};

/// Throws InvalidBounds unless 0 <= a_i < b_i for every i.
void validate(const Box3Bounds& box);

/// O_i = a_i b_j b_k + b_i a_j a_k for {i, j, k} = {1, 2, 3}.
std::array<Rational, 3> omega_values(const Box3Bounds& box);

/// Bounds relabeled so that O_1 <= O_2 <= O_3.
struct OmegaBox {
  Box3Bounds bounds;
  /// Normalized variable i is original variable perm[i] (0-based).
  std::array<int, 3> perm{0, 1, 2};

  /// Wraps bounds that are already labeled correctly (identity perm).
  /// Throws InvalidBounds or OmegaViolated.
  static OmegaBox assume_normalized(const Box3Bounds& box);
};

/// Stable sort of the indices by O_i; ties keep the original order.
OmegaBox omega_normalize(const Box3Bounds& box);

/// a1b2b3 + b1a2a3 <= b1a2b3 + a1b2a3 <= b1b2a3 + a1a2b3
bool omega_check(const Box3Bounds& box);
/// a1/b1 <= a2/b2 <= a3/b3, cross-multiplied.
bool omega_prime_check(const Box3Bounds& box);
/// b1a2 - a1b2 >= 0, b1a3 - a1b3 >= 0, b2a3 - a2b3 >= 0
bool omega_dprime_check(const Box3Bounds& box);

// The graph vertices over x3 = a3 (Q) and x3 = b3 (R), in coordinates
// (y, x1, x2). Listed in the order (b1,b2), (a1,a2), (b1,a2), (a1,b2).
std::array<Point3, 4> q_vertices(const OmegaBox& box);
std::array<Point3, 4> r_vertices(const OmegaBox& box);

/// Q as an oriented tetrahedron. Throws DegenerateTetrahedron when a3 = 0.
Tetrahedron build_Q(const OmegaBox& box);
Tetrahedron build_R(const OmegaBox& box);

/// The common factor (b1 - a1)(b2 - a2)/2 of every normal in U(Q) and U(R).
Rational normal_prefactor(const OmegaBox& box);

/// Outer facet normals of Q (resp. R) divided by normal_prefactor. These stay
/// polynomial in the bounds, so they are also the a3 -> 0 limit.
std::array<Vec3, 4> q_normal_directions(const OmegaBox& box);
std::array<Vec3, 4> r_normal_directions(const OmegaBox& box);

/// Closed-form support maximum z_i, i in 1..8: for i <= 4 the support of R
/// along the i-th direction of U(Q); for i >= 5 the support of Q along the
/// (i-4)-th direction of U(R). Only valid under the ordering condition.
Rational support_max_z(int i, const OmegaBox& box);

struct MixedVolumesQR {
  Rational qqr;  // V(Q, Q, R)
  Rational qrr;  // V(Q, R, R)
};

/// Mixed volumes from the z-lemma sums. Requires a3 > 0
/// (DegenerateTetrahedron otherwise).
MixedVolumesQR mixed_volumes_QR(const OmegaBox& box);

/// (b1-a1)(b2-a2)((b1-a1)(b2b3-a2a3) + (b3-a3)(b1b2-a1a2))/6, shared by both
/// mixed volumes.
Rational mixed_volume_closed_form(const OmegaBox& box);

/// a3 (b1-a1)^2 (b2-a2)^2 / 6
Rational vol_Q_formula(const OmegaBox& box);
/// b3 (b1-a1)^2 (b2-a2)^2 / 6
Rational vol_R_formula(const OmegaBox& box);

enum class IntegrationRule { Beta, Simpson };

/// (b3-a3)^-3 times the integral over [a3, b3] of the Bernstein cubic
/// (b3-t)^3 vQ + 3(b3-t)^2(t-a3) vQQR + 3(b3-t)(t-a3)^2 vQRR + (t-a3)^3 vR.
/// Throws InvalidBounds unless a3 < b3.
Rational integrate_cross_sections(const Rational& vQ, const Rational& vQQR,
                                  const Rational& vQRR, const Rational& vR,
                                  const Rational& a3, const Rational& b3,
                                  IntegrationRule rule = IntegrationRule::Beta);

/// The hull-volume polynomial evaluated on the bounds exactly as labeled,
/// without relabeling first.
Rational hull_volume_expression(const Box3Bounds& box);

/// Exact 4-volume of the hull of the graph of x1 x2 x3 over the box.
Rational closed_form_volume(const Box3Bounds& box);

struct VolumeReport {
  Box3Bounds box;
  std::array<int, 3> perm{0, 1, 2};
  Rational vol_formula;
  Rational vol_pipeline;
  std::optional<Rational> vol_oracle;
  bool agree = false;
  Rational vol_Q;
  Rational vol_R;
  Rational v_QQR;
  Rational v_QRR;
};

struct PipelineOptions {
  /// Also integrate with Simpson's rule and require equality.
  bool simpson_check = false;
};

/// Mixed-volume evaluation end to end. Every internal pair of routes
/// (determinant vs. formula volumes, z-lemmas vs. generic supports, closed
/// form vs. z sums) must agree or MethodDisagreement is thrown.
VolumeReport pipeline_volume(const Box3Bounds& box,
                             const PipelineOptions& options = {});

/// The 8 points (v1 v2 v3, v1, v2, v3), v_i in {a_i, b_i}, in lexicographic
/// order of the choice (a before b, x1 slowest).
std::array<Point4, 8> extreme_points(const Box3Bounds& box);

}  // namespace trivol
