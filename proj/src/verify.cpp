#include "trivol/cli.hpp"

#include "trivol/errors.hpp"
#include "trivol/oracle.hpp"

#include <ostream>
#include <random>
#include <sstream>

namespace trivol::cli {

std::vector<Box3Bounds> random_boxes(int count, std::uint64_t seed,
                                     int max_bound) {
  if (max_bound < 1) throw std::invalid_argument("max bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Box3Bounds> boxes;
  boxes.reserve(count);
  for (int n = 0; n < count; ++n) {
    Box3Bounds box;
    for (int i = 0; i < 3; ++i) {
      int a = std::uniform_int_distribution<int>(0, max_bound - 1)(rng);
      int b = std::uniform_int_distribution<int>(a + 1, max_bound)(rng);
      box.a[i] = a;
      box.b[i] = b;
    }
    boxes.push_back(box);
  }
  return boxes;
}

namespace {

std::string describe(const Box3Bounds& box) {
  std::ostringstream s;
  s << "a=(" << to_string(box.a[0]) << "," << to_string(box.a[1]) << ","
    << to_string(box.a[2]) << ") b=(" << to_string(box.b[0]) << ","
    << to_string(box.b[1]) << "," << to_string(box.b[2]) << ")";
  return s.str();
}

// Returns an empty string when every z_i equals the brute-force support
// maximum, else a description of the first mismatch.
std::string check_z_lemmas(const OmegaBox& box) {
  const auto q_dirs = q_normal_directions(box);
  const auto r_dirs = r_normal_directions(box);
  const auto q_pts = q_vertices(box);
  const auto r_pts = r_vertices(box);
  for (int i = 1; i <= 8; ++i) {
    Rational generic = i <= 4 ? support(r_pts, q_dirs[i - 1])
                              : support(q_pts, r_dirs[i - 5]);
    Rational lemma = support_max_z(i, box);
    if (lemma != generic)
      return "z" + std::to_string(i) + " = " + to_string(lemma) +
             " but the support maximum is " + to_string(generic);
  }
  return {};
}

std::string check_omega_equivalence(const Box3Bounds& box) {
  bool o = omega_check(box), p = omega_prime_check(box),
       d = omega_dprime_check(box);
  if (o == p && p == d) return {};
  return "omega=" + std::to_string(o) + " prime=" + std::to_string(p) +
         " dprime=" + std::to_string(d);
}

std::string check_mixed_symmetry(const OmegaBox& box) {
  if (box.bounds.a[2] == 0) return {};
  auto mv = mixed_volumes_QR(box);
  if (mv.qqr == mv.qrr) return {};
  return "V(Q,Q,R)=" + to_string(mv.qqr) + " V(Q,R,R)=" + to_string(mv.qrr);
}

std::string check_agreement(const Box3Bounds& box) {
  Rational formula = closed_form_volume(box);
  Rational pipeline;
  try {
    pipeline = pipeline_volume(box).vol_pipeline;
  } catch (const MethodDisagreement& e) {
    return e.what();
  }
  Rational hull = hull_volume_4d(extreme_points(box));
  Rational quadrature = quadrature_volume(box);
  if (formula == pipeline && pipeline == hull && hull == quadrature) return {};
  return "formula=" + to_string(formula) + " pipeline=" + to_string(pipeline) +
         " hull=" + to_string(hull) + " quadrature=" + to_string(quadrature);
}

}  // namespace

int verify(const VerifyOptions& options, std::ostream& log) {
  const auto boxes = random_boxes(options.trials, options.seed,
                                  options.max_bound);
  struct Property {
    const char* name;
    std::string (*check)(const Box3Bounds&);
  };
  const Property properties[] = {
      {"omega equivalence",
       [](const Box3Bounds& box) {
         std::string raw = check_omega_equivalence(box);
         if (!raw.empty()) return raw;
         return check_omega_equivalence(omega_normalize(box).bounds);
       }},
      {"z-lemma argmax",
       [](const Box3Bounds& box) { return check_z_lemmas(omega_normalize(box)); }},
      {"V(Q,Q,R) = V(Q,R,R)",
       [](const Box3Bounds& box) {
         return check_mixed_symmetry(omega_normalize(box));
       }},
      {"formula = pipeline = 4D hull = quadrature", check_agreement},
  };

  log << "verifying " << boxes.size() << " boxes (seed " << options.seed
      << ", max bound " << options.max_bound << ")\n";
  for (const auto& property : properties) {
    for (const auto& box : boxes) {
      std::string failure = property.check(box);
      if (!failure.empty()) {
        log << "FAIL " << property.name << "\n  counterexample: "
            << describe(box) << "\n  " << failure << "\n";
        return kPropertyViolation;
      }
    }
    log << "ok   " << property.name << "\n";
  }
  return kOk;
}

}  // namespace trivol::cli
