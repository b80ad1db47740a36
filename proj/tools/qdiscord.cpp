// qdiscord: discord of classical two-qubit states after local generalized
// amplitude damping.
//
//   qdiscord point  --lambda L --gamma G --p P
//   qdiscord sweep  --preset fig1|fig2 [--res N] [--out DIR] [--image]
//   qdiscord sweep  --axis1 name:min:max:count [--axis2 ...] --fixed name=value
//                   [--out FILE] [--image]
//   qdiscord verify [--seed N] [--oracle-res N] [--oracle-points N]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 I/O error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdiscord/qdiscord.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string field(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw UsageError(std::string("parameter ") + name + " = " + field(v) +
                     " is outside [0, 1]");
}

qdiscord::Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4) throw UsageError("axis '" + text + "' is not name:min:max:count");
  const auto param = qdiscord::parse_parameter(parts[0]);
  if (!param) throw UsageError("unknown axis parameter '" + parts[0] + "'");
  try {
    const double lo = std::stod(parts[1]);
    const double hi = std::stod(parts[2]);
    const long count = std::stol(parts[3]);
    if (count < 1) throw UsageError("axis '" + text + "' needs a positive count");
    return {*param, lo, hi, static_cast<std::size_t>(count)};
  } catch (const std::logic_error&) {
    throw UsageError("axis '" + text + "' has a malformed number");
  }
}

void parse_fixed(const std::string& text, qdiscord::SweepSpec& spec) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("fixed value '" + text + "' is not name=value");
  const auto param = qdiscord::parse_parameter(text.substr(0, eq));
  if (!param) throw UsageError("unknown fixed parameter '" + text.substr(0, eq) + "'");
  try {
    const double v = std::stod(text.substr(eq + 1));
    require_unit(v, qdiscord::to_string(*param));
    spec.fix(*param, v);
  } catch (const std::logic_error&) {
    throw UsageError("fixed value '" + text + "' has a malformed number");
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void write_grid(const qdiscord::SweepGrid& grid, const std::filesystem::path& csv_path,
                bool image) {
  {
    auto out = open_output(csv_path);
    qdiscord::write_csv(out, grid);
    if (!out) throw IoError("write failed for " + csv_path.string());
  }
  std::cout << "wrote " << csv_path.string() << '\n';
  if (image) {
    auto pgm_path = csv_path;
    pgm_path.replace_extension(".pgm");
    auto out = open_output(pgm_path);
    qdiscord::write_pgm(out, grid);
    if (!out) throw IoError("write failed for " + pgm_path.string());
    std::cout << "wrote " << pgm_path.string() << '\n';
  }
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir))
    throw IoError("cannot create output directory " + dir.string());
}

int cmd_point(double lambda, double gamma, double p) {
  require_unit(lambda, "lambda");
  require_unit(gamma, "gamma");
  require_unit(p, "p");
  const auto r = qdiscord::evaluate_point({lambda, gamma, p});
  const std::pair<const char*, double> rows[] = {
      {"lambda", r.lambda},
      {"gamma", r.gamma},
      {"p", r.p},
      {"x3", r.x3},
      {"T13", r.t13},
      {"T33", r.t33},
      {"D_geometric", r.geometric},
      {"D_entropic", r.entropic.value},
      {"theta_star", r.entropic.theta_star},
      {"S_A", r.entropic.entropy_a},
      {"S_AB", r.entropic.entropy},
  };
  for (const auto& [name, value] : rows) std::cout << name << " = " << field(value) << '\n';
  return kExitOk;
}

int cmd_sweep(const std::string& preset, std::size_t res, const std::string& axis1,
              const std::string& axis2, const std::vector<std::string>& fixed,
              const std::string& out, bool image) {
  namespace fs = std::filesystem;
  if (!preset.empty()) {
    if (!axis1.empty() || !axis2.empty() || !fixed.empty())
      throw UsageError("--preset cannot be combined with --axis1/--axis2/--fixed");
    if (res < 2) throw UsageError("--res must be at least 2");
    const fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
    std::vector<std::pair<qdiscord::SweepGrid, fs::path>> grids;
    if (preset == "fig1") {
      for (const auto& spec : qdiscord::figure1_specs(res)) {
        const double p = *spec.fixed[static_cast<std::size_t>(qdiscord::Parameter::p)];
        grids.emplace_back(qdiscord::run_sweep(spec), dir / ("fig1_p" + field(p) + ".csv"));
      }
    } else if (preset == "fig2") {
      grids.emplace_back(qdiscord::run_sweep(qdiscord::figure2_spec(res)),
                         dir / "fig2_lambda0.5.csv");
    } else {
      throw UsageError("unknown preset '" + preset + "' (expected fig1 or fig2)");
    }
    ensure_directory(dir);
    for (const auto& [grid, path] : grids) write_grid(grid, path, image);
    return kExitOk;
  }

  if (axis1.empty()) throw UsageError("sweep needs --preset or --axis1");
  qdiscord::SweepSpec spec;
  spec.axes.push_back(parse_axis(axis1));
  if (!axis2.empty()) spec.axes.push_back(parse_axis(axis2));
  for (const auto& f : fixed) parse_fixed(f, spec);
  qdiscord::SweepGrid grid;
  try {
    grid = qdiscord::run_sweep(spec);
  } catch (const qdiscord::ConfigError& e) {
    throw UsageError(e.what());
  }
  const fs::path csv = out.empty() ? fs::path("sweep.csv") : fs::path(out);
  if (csv.has_parent_path()) ensure_directory(csv.parent_path());
  write_grid(grid, csv, image);
  return kExitOk;
}

int cmd_verify(const qdiscord::VerifyConfig& cfg) {
  if (cfg.oracle_resolution < qdiscord::kMinOracleResolution)
    throw UsageError("--oracle-res must be at least 64");
  bool all = true;
  for (const auto& r : qdiscord::run_verification(cfg)) {
    std::printf("%-4s  %-58s  residual=%.3e  tolerance=%.3e\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.residual, r.tolerance);
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "all checks passed" : "verification FAILED");
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord created by local generalized amplitude damping"};
  app.require_subcommand(1);

  double lambda = 0.0, gamma = 0.0, p = 0.0;
  auto* point = app.add_subcommand("point", "Evaluate one (lambda, gamma, p)");
  point->add_option("--lambda", lambda, "Initial-state superposition weight")->required();
  point->add_option("--gamma", gamma, "Channel decay probability")->required();
  point->add_option("--p", p, "Channel ground-state bias")->required();

  std::string preset, axis1, axis2, out;
  std::vector<std::string> fixed;
  std::size_t res = qdiscord::kFigureResolution;
  bool image = false;
  auto* sweep = app.add_subcommand("sweep", "Write discord grids as CSV (and PGM)");
  sweep->add_option("--preset", preset, "fig1 or fig2");
  sweep->add_option("--res", res, "Points per axis for presets");
  sweep->add_option("--axis1", axis1, "name:min:max:count");
  sweep->add_option("--axis2", axis2, "name:min:max:count");
  sweep->add_option("--fixed", fixed, "name=value for each unswept parameter");
  sweep->add_option("--out", out, "Output directory (presets) or CSV path");
  sweep->add_flag("--image", image, "Also write a grayscale heatmap per grid");

  qdiscord::VerifyConfig vcfg;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--seed", vcfg.seed, "Seed for randomized checks");
  verify->add_option("--oracle-res", vcfg.oracle_resolution, "Brute-force grid resolution");
  verify->add_option("--oracle-points", vcfg.oracle_points, "States compared with brute force");
  verify->add_option("--tolerance-scale", vcfg.tolerance_scale, "Multiplier on every tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*point) return cmd_point(lambda, gamma, p);
    if (*sweep) return cmd_sweep(preset, res, axis1, axis2, fixed, out, image);
    return cmd_verify(vcfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qdiscord::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}
