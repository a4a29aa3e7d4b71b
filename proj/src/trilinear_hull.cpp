#include "trivol/trilinear_hull.hpp"

#include "trivol/errors.hpp"
#include "trivol/mixed_volume.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trivol {

void validate(const Box3Bounds& box) {
  for (int i = 0; i < 3; ++i) {
    std::string var = "x" + std::to_string(i + 1);
    if (box.a[i] < 0)
      throw InvalidBounds(var + " has negative lower bound " +
                          to_string(box.a[i]));
    if (box.a[i] >= box.b[i])
      throw InvalidBounds(var + " has empty interval [" + to_string(box.a[i]) +
                          ", " + to_string(box.b[i]) + "]");
  }
}

std::array<Rational, 3> omega_values(const Box3Bounds& box) {
  const auto& [a, b] = box;
  return {a[0] * b[1] * b[2] + b[0] * a[1] * a[2],
          a[1] * b[0] * b[2] + b[1] * a[0] * a[2],
          a[2] * b[0] * b[1] + b[2] * a[0] * a[1]};
}

OmegaBox OmegaBox::assume_normalized(const Box3Bounds& box) {
  validate(box);
  if (!omega_check(box))
    throw OmegaViolated("O_1 <= O_2 <= O_3 fails for the given labeling");
  return OmegaBox{box, {0, 1, 2}};
}

OmegaBox omega_normalize(const Box3Bounds& box) {
  validate(box);
  auto o = omega_values(box);
  OmegaBox out;
  std::stable_sort(out.perm.begin(), out.perm.end(),
                   [&](int i, int j) { return o[i] < o[j]; });
  for (int i = 0; i < 3; ++i) {
    out.bounds.a[i] = box.a[out.perm[i]];
    out.bounds.b[i] = box.b[out.perm[i]];
  }
  return out;
}

bool omega_check(const Box3Bounds& box) {
  validate(box);
  auto o = omega_values(box);
  return o[0] <= o[1] && o[1] <= o[2];
}

bool omega_prime_check(const Box3Bounds& box) {
  validate(box);
  const auto& [a, b] = box;
  return a[0] * b[1] <= a[1] * b[0] && a[1] * b[2] <= a[2] * b[1];
}

bool omega_dprime_check(const Box3Bounds& box) {
  validate(box);
  const auto& [a, b] = box;
  return b[0] * a[1] - a[0] * b[1] >= 0 && b[0] * a[2] - a[0] * b[2] >= 0 &&
         b[1] * a[2] - a[1] * b[2] >= 0;
}

namespace {

std::array<Point3, 4> level_vertices(const OmegaBox& box, const Rational& x3) {
  const auto& [a, b] = box.bounds;
  return {{{b[0] * b[1] * x3, b[0], b[1]},
           {a[0] * a[1] * x3, a[0], a[1]},
           {b[0] * a[1] * x3, b[0], a[1]},
           {a[0] * b[1] * x3, a[0], b[1]}}};
}

std::array<Vec3, 4> level_normals(const OmegaBox& box, const Rational& x3) {
  const auto& [a, b] = box.bounds;
  return {{{Rational(1), -a[1] * x3, -b[0] * x3},
           {Rational(1), -b[1] * x3, -a[0] * x3},
           {Rational(-1), b[1] * x3, b[0] * x3},
           {Rational(-1), a[1] * x3, a[0] * x3}}};
}

void require_omega(const OmegaBox& box) {
  if (!omega_check(box.bounds))
    throw OmegaViolated("bounds are not normalized");
}

void require_equal(const Rational& lhs, const Rational& rhs,
                   const std::string& what) {
  if (lhs != rhs)
    throw MethodDisagreement(what + ": " + to_string(lhs) +
                             " != " + to_string(rhs));
}

}  // namespace

std::array<Point3, 4> q_vertices(const OmegaBox& box) {
  return level_vertices(box, box.bounds.a[2]);
}

std::array<Point3, 4> r_vertices(const OmegaBox& box) {
  return level_vertices(box, box.bounds.b[2]);
}

Tetrahedron build_Q(const OmegaBox& box) {
  validate(box.bounds);
  if (box.bounds.a[2] == 0)
    throw DegenerateTetrahedron("Q is flat when a3 = 0");
  return Tetrahedron::orient(q_vertices(box));
}

Tetrahedron build_R(const OmegaBox& box) {
  validate(box.bounds);
  return Tetrahedron::orient(r_vertices(box));
}

Rational normal_prefactor(const OmegaBox& box) {
  const auto& [a, b] = box.bounds;
  return (b[0] - a[0]) * (b[1] - a[1]) / 2;
}

std::array<Vec3, 4> q_normal_directions(const OmegaBox& box) {
  return level_normals(box, box.bounds.a[2]);
}

std::array<Vec3, 4> r_normal_directions(const OmegaBox& box) {
  return level_normals(box, box.bounds.b[2]);
}

Rational support_max_z(int i, const OmegaBox& box) {
  require_omega(box);
  const auto& [a1, a2, a3] = box.bounds.a;
  const auto& [b1, b2, b3] = box.bounds.b;
  switch (i) {
    case 1: return b1 * b2 * b3 - b1 * a2 * a3 - b1 * b2 * a3;
    case 2: return b1 * b2 * b3 - a1 * b2 * a3 - b1 * b2 * a3;
#ifdef TRIVOL_INJECT_Z3_SIGN_FLIP
    case 3: return -(a1 * b2 * a3 + b1 * b2 * a3 - a1 * b2 * b3);
#else
    case 3: return a1 * b2 * a3 + b1 * b2 * a3 - a1 * b2 * b3;
#endif
    case 4: return 2 * a1 * a2 * a3 - a1 * a2 * b3;
    case 5: return a1 * a2 * a3 - a1 * a2 * b3 - b1 * a2 * b3;
    case 6: return a1 * a2 * a3 - a1 * a2 * b3 - a1 * b2 * b3;
    case 7: return 2 * b1 * b2 * b3 - b1 * b2 * a3;
    case 8: return a1 * a2 * b3 + b1 * a2 * b3 - b1 * a2 * a3;
    default:
      throw std::out_of_range("z index must be in 1..8, got " +
                              std::to_string(i));
  }
}

namespace {

// The z sums stay polynomial at a3 = 0, where they give the flat limit.
MixedVolumesQR z_lemma_mixed_volumes(const OmegaBox& box) {
  Rational scale = normal_prefactor(box) / 3;
  Rational qqr = 0, qrr = 0;
  for (int i = 1; i <= 4; ++i) qqr += support_max_z(i, box);
  for (int i = 5; i <= 8; ++i) qrr += support_max_z(i, box);
  return {scale * qqr, scale * qrr};
}

}  // namespace

MixedVolumesQR mixed_volumes_QR(const OmegaBox& box) {
  validate(box.bounds);
  if (box.bounds.a[2] == 0)
    throw DegenerateTetrahedron("Q is flat when a3 = 0");
  return z_lemma_mixed_volumes(box);
}

Rational mixed_volume_closed_form(const OmegaBox& box) {
  const auto& [a1, a2, a3] = box.bounds.a;
  const auto& [b1, b2, b3] = box.bounds.b;
  return (b1 - a1) * (b2 - a2) *
         ((b1 - a1) * (b2 * b3 - a2 * a3) + (b3 - a3) * (b1 * b2 - a1 * a2)) /
         6;
}

Rational vol_Q_formula(const OmegaBox& box) {
  const auto& [a, b] = box.bounds;
  Rational d1 = b[0] - a[0], d2 = b[1] - a[1];
  return a[2] * d1 * d1 * d2 * d2 / 6;
}

Rational vol_R_formula(const OmegaBox& box) {
  const auto& [a, b] = box.bounds;
  Rational d1 = b[0] - a[0], d2 = b[1] - a[1];
  return b[2] * d1 * d1 * d2 * d2 / 6;
}

Rational integrate_cross_sections(const Rational& vQ, const Rational& vQQR,
                                  const Rational& vQRR, const Rational& vR,
                                  const Rational& a3, const Rational& b3,
                                  IntegrationRule rule) {
  if (a3 >= b3)
    throw InvalidBounds("integration interval [" + to_string(a3) + ", " +
                        to_string(b3) + "] is empty");
  const Rational width = b3 - a3;
  // Bernstein weights: the t^0..t^3 coefficients are C(3,k) * V_k.
  const std::array<Rational, 4> weighted = {vQ, 3 * vQQR, 3 * vQRR, vR};

  if (rule == IntegrationRule::Simpson) {
    auto cubic = [&](const Rational& t) -> Rational {
      Rational down = b3 - t, up = t - a3;
      return (down * down * down * weighted[0] + down * down * up * weighted[1] +
              down * up * up * weighted[2] + up * up * up * weighted[3]) /
             (width * width * width);
    };
    return width / 6 * (cubic(a3) + 4 * cubic((a3 + b3) / 2) + cubic(b3));
  }

  // Integral of (b-t)^(3-k) (t-a)^k over [a, b] is (b-a)^4 k! (3-k)! / 4!.
  constexpr std::array<int, 4> factorial = {1, 1, 2, 6};
  Rational sum = 0;
  for (int k = 0; k < 4; ++k)
    sum += weighted[k] * factorial[k] * factorial[3 - k];
  return width * sum / 24;
}

Rational hull_volume_expression(const Box3Bounds& box) {
  const auto& [a1, a2, a3] = box.a;
  const auto& [b1, b2, b3] = box.b;
  return (b1 - a1) * (b2 - a2) * (b3 - a3) *
         (b1 * (5 * b2 * b3 - a2 * b3 - b2 * a3 - 3 * a2 * a3) +
          a1 * (5 * a2 * a3 - b2 * a3 - a2 * b3 - 3 * b2 * b3)) /
         24;
}

Rational closed_form_volume(const Box3Bounds& box) {
  return hull_volume_expression(omega_normalize(box).bounds);
}

VolumeReport pipeline_volume(const Box3Bounds& box,
                             const PipelineOptions& options) {
  const OmegaBox normalized = omega_normalize(box);
  const Rational& a3 = normalized.bounds.a[2];
  const Rational& b3 = normalized.bounds.b[2];

  VolumeReport report;
  report.box = box;
  report.perm = normalized.perm;
  report.vol_Q = vol_Q_formula(normalized);
  report.vol_R = vol_R_formula(normalized);

  const auto q_points = q_vertices(normalized);
  const auto r_points = r_vertices(normalized);
  const Tetrahedron r = build_R(normalized);
  require_equal(tetra_volume(r), report.vol_R, "Vol(R) determinant vs formula");

  // z-lemma route.
  MixedVolumesQR mv = z_lemma_mixed_volumes(normalized);

  // Generic route: support functions over the facet normals of Q and R.
  Rational qqr_generic;
  if (a3 > 0) {
    const Tetrahedron q = build_Q(normalized);
    require_equal(tetra_volume(q), report.vol_Q,
                  "Vol(Q) determinant vs formula");
    qqr_generic = mixed_volume_against(q, r_points);
  } else {
    std::array<Vec3, 4> normals = q_normal_directions(normalized);
    for (auto& u : normals) u = normal_prefactor(normalized) * u;
    qqr_generic = mixed_volume_from_normals(normals, r_points);
  }
  const Rational qrr_generic = mixed_volume_against(r, q_points);

  require_equal(mv.qqr, qqr_generic, "V(Q,Q,R) z-lemmas vs supports");
  require_equal(mv.qrr, qrr_generic, "V(Q,R,R) z-lemmas vs supports");
  const Rational closed = mixed_volume_closed_form(normalized);
  require_equal(mv.qqr, closed, "V(Q,Q,R) z-lemmas vs closed form");
  require_equal(mv.qrr, closed, "V(Q,R,R) z-lemmas vs closed form");

  report.v_QQR = mv.qqr;
  report.v_QRR = mv.qrr;
  report.vol_pipeline = integrate_cross_sections(
      report.vol_Q, mv.qqr, mv.qrr, report.vol_R, a3, b3);
  if (options.simpson_check)
    require_equal(report.vol_pipeline,
                  integrate_cross_sections(report.vol_Q, mv.qqr, mv.qrr,
                                           report.vol_R, a3, b3,
                                           IntegrationRule::Simpson),
                  "Beta integral vs Simpson");

  report.vol_formula = hull_volume_expression(normalized.bounds);
  report.agree = report.vol_formula == report.vol_pipeline;
  return report;
}

std::array<Point4, 8> extreme_points(const Box3Bounds& box) {
  validate(box);
  std::array<Point4, 8> points;
  for (int choice = 0; choice < 8; ++choice) {
    const Rational& v1 = (choice & 4) ? box.b[0] : box.a[0];
    const Rational& v2 = (choice & 2) ? box.b[1] : box.a[1];
    const Rational& v3 = (choice & 1) ? box.b[2] : box.a[2];
    points[choice] = {v1 * v2 * v3, v1, v2, v3};
  }
  return points;
}

}  // namespace trivol
