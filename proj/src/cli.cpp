#include "trivol/cli.hpp"

#include "trivol/errors.hpp"
#include "trivol/mixed_volume.hpp"
#include "trivol/oracle.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace trivol::cli {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Box3Bounds read_box(const std::string& bounds, const std::string& file) {
  if (bounds.empty() == file.empty())
    throw std::invalid_argument("give exactly one of --bounds or --file");
  return bounds.empty() ? box_from_json(read_json_file(file))
                        : parse_bounds_list(bounds);
}

json perm_to_json(const std::array<int, 3>& perm) {
  return json::array({perm[0] + 1, perm[1] + 1, perm[2] + 1});
}

int cmd_volume(const Box3Bounds& box, const std::string& method,
               bool simpson_check, std::ostream& out) {
  const bool all = method == "all";
  json doc;
  doc["box"] = box_to_json(box);
  doc["perm"] = perm_to_json(omega_normalize(box).perm);
  json methods = json::array();
  std::vector<Rational> values;

  if (all || method == "formula") {
    values.push_back(closed_form_volume(box));
    methods.push_back("formula");
    doc["vol_formula"] = to_string(values.back());
  }
  if (all || method == "pipeline") {
    VolumeReport report = pipeline_volume(box, {simpson_check});
    values.push_back(report.vol_pipeline);
    methods.push_back("pipeline");
    doc["vol_pipeline"] = to_string(report.vol_pipeline);
    doc["intermediates"] = {{"vol_Q", to_string(report.vol_Q)},
                            {"vol_R", to_string(report.vol_R)},
                            {"V_QQR", to_string(report.v_QQR)},
                            {"V_QRR", to_string(report.v_QRR)}};
  }
  if (all || method == "oracle") {
    values.push_back(hull_volume_4d(extreme_points(box)));
    methods.push_back("oracle");
    doc["vol_oracle"] = to_string(values.back());
  }

  doc["methods"] = methods;
  doc["vol"] = to_string(values.front());
  doc["vol_decimal"] = to_rounded_double(values.front());
  bool agree = true;
  for (const auto& v : values) agree = agree && v == values.front();
  if (values.size() >= 2) doc["agree"] = agree;
  out << doc.dump(2) << '\n';
  return agree ? kOk : kDisagreement;
}

int cmd_normalize(const Box3Bounds& box, std::ostream& out) {
  OmegaBox normalized = omega_normalize(box);
  json o = json::array();
  for (const auto& v : omega_values(box)) o.push_back(to_string(v));
  json doc = {{"box", box_to_json(box)},
              {"O", o},
              {"omega_holds", omega_check(box)},
              {"perm", perm_to_json(normalized.perm)},
              {"normalized", box_to_json(normalized.bounds)}};
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_mixed_volume(const std::string& file, std::ostream& out) {
  auto [k, l] = bodies_from_json(read_json_file(file));
  VolumeCubic cubic = volume_cubic(k, l);
  json doc = {{"c0", to_string(cubic.c0)},       {"c1", to_string(cubic.c1)},
              {"c2", to_string(cubic.c2)},       {"c3", to_string(cubic.c3)},
              {"V_KKL", to_string(cubic.v_kkl())}, {"V_KLL", to_string(cubic.v_kll())}};
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_sweep(const std::string& file, bool as_float, const std::string& out_path,
              std::ostream& out) {
  std::string csv = sweep_csv(read_json_file(file), as_float);
  if (out_path.empty()) {
    out << csv;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + out_path);
    f << csv;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact 4-volume of the convex hull of y = x1 x2 x3 over a box"};
  app.name(argv.empty() ? "trivol" : argv.front());
  app.require_subcommand(1);

  std::string bounds, file, method = "all", out_path;
  bool simpson_check = false, as_float = false;
  VerifyOptions verify_options;

  auto* volume = app.add_subcommand("volume", "Volume of one box");
  volume->add_option("--bounds", bounds, "a1,b1,a2,b2,a3,b3");
  volume->add_option("--file", file, "Box JSON file");
  volume->add_option("--method", method, "formula|pipeline|oracle|all")
      ->check(CLI::IsMember({"formula", "pipeline", "oracle", "all"}));
  volume->add_flag("--simpson-check", simpson_check,
                   "Re-integrate with Simpson's rule inside the pipeline");

  auto* normalize = app.add_subcommand("normalize", "Show the variable relabeling");
  normalize->add_option("--bounds", bounds, "a1,b1,a2,b2,a3,b3");
  normalize->add_option("--file", file, "Box JSON file");

  auto* verify_cmd = app.add_subcommand("verify", "Property checks on random boxes");
  auto* seed_opt = verify_cmd->add_option("--seed", verify_options.seed);
  verify_cmd->add_option("--trials", verify_options.trials)
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-bound", verify_options.max_bound)
      ->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Volumes over a parameter grid as CSV");
  sweep->add_option("--file", file, "Sweep JSON file")->required();
  sweep->add_flag("--float", as_float, "Decimal output instead of p/q");
  sweep->add_option("--out", out_path, "Write CSV here instead of stdout");

  auto* mixed = app.add_subcommand("mixed-volume",
                                   "Volume polynomial of K + tL for two point sets");
  mixed->add_option("--file", file, "Bodies JSON file")->required();

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*volume) return cmd_volume(read_box(bounds, file), method, simpson_check, out);
    if (*normalize) return cmd_normalize(read_box(bounds, file), out);
    if (*sweep) return cmd_sweep(file, as_float, out_path, out);
    if (*mixed) return cmd_mixed_volume(file, out);
    if (*verify_cmd) {
      if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("TRIVOL_SEED"))
          verify_options.seed = std::stoull(env);
      }
      return verify(verify_options, out);
    }
  } catch (const MethodDisagreement& e) {
    err << "error: " << e.what() << '\n';
    return kDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace trivol::cli
