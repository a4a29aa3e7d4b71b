#pragma once

#include "trivol/trilinear_hull.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace trivol::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyViolation = 1,
  kBadInput = 2,
  kDisagreement = 3,
};

/// Entry point shared by the executable and the tests. argv[0] is the
/// program name.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

// File formats. All parsers throw std::invalid_argument on malformed input
// and InvalidBounds on well-formed but invalid boxes.

/// JSON integer, or a string holding an integer, decimal or "p/q".
Rational rational_from_json(const nlohmann::json& value);

/// "a1,b1,a2,b2,a3,b3"
Box3Bounds parse_bounds_list(std::string_view text);

/// {"a": [r, r, r], "b": [r, r, r]}
Box3Bounds box_from_json(const nlohmann::json& doc);
nlohmann::json box_to_json(const Box3Bounds& box);

/// {"K": [[x, y, z], ...], "L": [[x, y, z], ...]}
std::pair<std::vector<Point3>, std::vector<Point3>> bodies_from_json(
    const nlohmann::json& doc);

/// Sweep grid {"a1": [...], "b1": [...], ..., "b3": [...], "filter": "valid"}
/// rendered as CSV. Grid order is lexicographic in (a1, b1, a2, b2, a3, b3)
/// with b3 varying fastest.
std::string sweep_csv(const nlohmann::json& spec, bool as_float);

struct VerifyOptions {
  int trials = 200;
  std::uint64_t seed = 0;
  int max_bound = 10;
};

/// Random boxes with integer bounds 0 <= a_i < b_i <= max_bound.
std::vector<Box3Bounds> random_boxes(int count, std::uint64_t seed,
                                     int max_bound);

/// Runs the property suites on random boxes, writing a summary to `log`.
/// Returns kOk or kPropertyViolation (after printing the counterexample).
int verify(const VerifyOptions& options, std::ostream& log);

}  // namespace trivol::cli
