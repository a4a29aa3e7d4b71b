#include "trivol/cli.hpp"

#include "trivol/errors.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace trivol::cli {

using nlohmann::json;

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>())
                                      : Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_float())
    throw std::invalid_argument(
        "binary floating-point values are not exact; write \"" +
        value.dump() + "\" as a string");
  throw std::invalid_argument("expected a rational, got " + value.dump());
}

Box3Bounds parse_bounds_list(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    values.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 6)
    throw std::invalid_argument("--bounds needs 6 values a1,b1,a2,b2,a3,b3");
  Box3Bounds box;
  for (int i = 0; i < 3; ++i) {
    box.a[i] = values[2 * i];
    box.b[i] = values[2 * i + 1];
  }
  validate(box);
  return box;
}

namespace {

std::array<Rational, 3> triple(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != 3)
    throw std::invalid_argument(std::string("\"") + key +
                                "\" must be an array of 3 rationals");
  return {rational_from_json(doc[key][0]), rational_from_json(doc[key][1]),
          rational_from_json(doc[key][2])};
}

std::vector<Point3> point_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw std::invalid_argument(std::string("\"") + key +
                                "\" must be an array of points");
  std::vector<Point3> points;
  for (const auto& p : doc[key]) {
    if (!p.is_array() || p.size() != 3)
      throw std::invalid_argument(std::string("points of \"") + key +
                                  "\" must have 3 coordinates");
    points.push_back({rational_from_json(p[0]), rational_from_json(p[1]),
                      rational_from_json(p[2])});
  }
  return points;
}

}  // namespace

Box3Bounds box_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("box file must be an object");
  Box3Bounds box{triple(doc, "a"), triple(doc, "b")};
  validate(box);
  return box;
}

json box_to_json(const Box3Bounds& box) {
  json a = json::array(), b = json::array();
  for (int i = 0; i < 3; ++i) {
    a.push_back(to_string(box.a[i]));
    b.push_back(to_string(box.b[i]));
  }
  return {{"a", a}, {"b", b}};
}

std::pair<std::vector<Point3>, std::vector<Point3>> bodies_from_json(
    const json& doc) {
  if (!doc.is_object())
    throw std::invalid_argument("bodies file must be an object");
  return {point_list(doc, "K"), point_list(doc, "L")};
}

std::string sweep_csv(const json& spec, bool as_float) {
  static constexpr std::array<const char*, 6> kKeys = {"a1", "b1", "a2",
                                                        "b2", "a3", "b3"};
  if (!spec.is_object()) throw std::invalid_argument("sweep spec must be an object");
  std::array<std::vector<Rational>, 6> grid;
  for (std::size_t k = 0; k < kKeys.size(); ++k) {
    const char* key = kKeys[k];
    if (!spec.contains(key) || !spec[key].is_array() || spec[key].empty())
      throw std::invalid_argument(std::string("\"") + key +
                                  "\" must be a non-empty array");
    for (const auto& v : spec[key]) grid[k].push_back(rational_from_json(v));
  }
  bool drop_invalid = false;
  if (spec.contains("filter")) {
    if (spec["filter"] != "valid")
      throw std::invalid_argument("unknown filter " + spec["filter"].dump());
    drop_invalid = true;
  }

  auto fmt = [as_float](const Rational& r) {
    return as_float ? to_decimal_string(r) : to_string(r);
  };

  std::ostringstream csv;
  csv << "a1,b1,a2,b2,a3,b3,volume,perm\n";
  std::size_t skipped = 0;
  std::array<std::size_t, 6> idx{};
  while (true) {
    Box3Bounds box;
    for (int i = 0; i < 3; ++i) {
      box.a[i] = grid[2 * i][idx[2 * i]];
      box.b[i] = grid[2 * i + 1][idx[2 * i + 1]];
    }
    try {
      validate(box);
      OmegaBox normalized = omega_normalize(box);
      for (int i = 0; i < 3; ++i) csv << fmt(box.a[i]) << ',' << fmt(box.b[i]) << ',';
      csv << fmt(closed_form_volume(box)) << ',';
      for (int p : normalized.perm) csv << p + 1;
      csv << '\n';
    } catch (const InvalidBounds&) {
      if (!drop_invalid) throw;
      ++skipped;
    }
    // Odometer increment, last key fastest.
    int k = 5;
    while (k >= 0 && ++idx[k] == grid[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  if (skipped > 0) csv << "# skipped: " << skipped << '\n';
  return csv.str();
}

}  // namespace trivol::cli
