#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "su3/io.hpp"
#include "su3/verify.hpp"

using nlohmann::json;
using namespace su3;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kIoError = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts inline JSON or a path to a JSON file.
json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("cannot parse JSON: ") + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open " + arg);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("cannot parse " + arg + ": " + e.what());
  }
}

void print(const json& j) { std::cout << std::setprecision(17) << j.dump(2) << '\n'; }

int cmd_compose(const std::string& angles_arg, const std::vector<double>& positional) {
  EulerAngles x;
  if (!angles_arg.empty()) {
    if (!positional.empty()) throw InputError("give either --angles or 8 positional angles, not both");
    x = io::angles_from_json(read_json_arg(angles_arg));
  } else {
    if (positional.size() != 8)
      throw InputError("expected 8 angles, got " + std::to_string(positional.size()));
    std::array<double, 8> a;
    std::copy(positional.begin(), positional.end(), a.begin());
    x = EulerAngles::from_array(a);
  }
  for (int k = 0; k < 8; ++k)
    if (!std::isfinite(x[k])) throw InputError(std::string("angle ") + kCoordNames[k] + " is not finite");
  const Mat3 u = compose(x).matrix();
  std::cerr << "unitarity residual " << unitarity_residual(u) << ", det residual "
            << determinant_residual(u) << '\n';
  print(io::matrix_to_json(u));
  return kOk;
}

int cmd_decompose(const std::string& path, double tol) {
  const Mat3 m = io::matrix_from_json(read_json_arg(path));
  GroupElement g;
  try {
    g = GroupElement(m, tol);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto d = decompose(g);
  json out = {{"angles", io::angles_to_json(d.angles)}, {"strata", io::strata_to_json(d.strata)}};
  std::cerr << "reconstruction residual "
            << (compose(d.angles).matrix() - m).cwiseAbs().maxCoeff() << '\n';
  if (d.strata.any()) std::cerr << "degenerate stratum: " << d.strata.describe() << '\n';
  print(out);
  return kOk;
}

int cmd_haar(std::size_t n, std::uint64_t seed, const std::string& out_path, const std::string& ranges) {
  if (n < 1) throw InputError("--n must be at least 1");
  const RangeConvention conv = ranges == "standard" ? RangeConvention::Standard : RangeConvention::Covering;
  const auto samples = sample_haar(seed, n, conv);
  if (out_path.empty() || out_path == "-") {
    io::write_samples_csv(std::cout, samples);
    return kOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return kIoError;
  }
  io::write_samples_csv(out, samples);
  out.close();
  if (!out) {
    std::cerr << "error: write to " << out_path << " failed\n";
    return kIoError;
  }
  std::cerr << "wrote " << n << " samples to " << out_path << '\n';
  return kOk;
}

// An axis-aligned rectangle traversed as (u0,v0) → (u1,v0) → (u1,v1) → (u0,v1) → (u0,v0).
RectangleSurface rectangle_of(const LoopSpec& loop) {
  const auto& w = loop.waypoints;
  const InputError bad("curvature method needs a loop of 5 waypoints tracing an axis-aligned rectangle "
                       "in two coordinates");
  if (w.size() != 5) throw bad;
  auto moved = [&](int s) {
    std::vector<int> ks;
    for (int k = 0; k < 8; ++k)
      if (w[s + 1][k] != w[s][k]) ks.push_back(k);
    return ks;
  };
  const auto m0 = moved(0), m1 = moved(1);
  if (m0.size() != 1 || m1.size() != 1 || m0[0] == m1[0]) throw bad;
  RectangleSurface r;
  r.u = static_cast<Coord>(m0[0]);
  r.v = static_cast<Coord>(m1[0]);
  r.base = w[0];
  r.u0 = w[0][r.u];
  r.u1 = w[1][r.u];
  r.v0 = w[0][r.v];
  r.v1 = w[2][r.v];
  EulerAngles c3 = w[0];
  c3[r.v] = r.v1;
  if (!(w[3] == c3) || !(w[4] == w[0])) throw bad;
  r.samples_u = r.samples_v = loop.samples_per_segment;
  return r;
}

int cmd_phase(const std::string& path, const std::string& method, bool include_dphi) {
  LoopSpec loop;
  try {
    loop = io::loop_from_json(read_json_arg(path));
    loop.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  double phase = 0;
  std::size_t samples = loop.total_samples();
  if (method == "connection") {
    phase = phase_connection(loop, include_dphi);
  } else if (method == "pancharatnam") {
    try {
      phase = phase_pancharatnam(loop, include_dphi);
    } catch (const std::domain_error& e) {
      throw InputError(e.what());
    }
  } else {
    const auto rect = rectangle_of(loop);
    phase = phase_curvature(rect);
    // dφ is exact and a rectangle has no net winding, so include_dphi changes nothing here
    samples = static_cast<std::size_t>(rect.samples_u + 1) * (rect.samples_v + 1);
  }
  print(io::phase_result_json(method, phase, samples));
  return kOk;
}

int cmd_verify(const std::string& level, std::uint64_t seed, double tol) {
  VerifyOptions opt;
  opt.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
  opt.seed = seed;
  opt.tol = tol;
  const auto rep = run_verification(opt);
  for (const auto& c : rep.checks)
    std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.residual << " <= " << c.threshold << '\n';
  std::cerr << "appendix catalogue: " << rep.appendix.entries.size() << " entries\n";
  print(rep.to_json());
  return rep.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler-angle toolkit for SU(3)"};
  app.require_subcommand(1);

  auto* compose_cmd = app.add_subcommand("compose", "Matrix of the product of exponentials");
  std::string angles_arg;
  std::vector<double> positional;
  compose_cmd->add_option("--angles", angles_arg, "JSON object/array of 8 angles, or a JSON file");
  compose_cmd->add_option("radians", positional, "alpha beta gamma theta a b c phi")->expected(0, 8);

  auto* decompose_cmd = app.add_subcommand("decompose", "Euler angles of an SU(3) matrix");
  std::string matrix_path;
  double decompose_tol = 1e-8;
  decompose_cmd->add_option("--matrix", matrix_path, "JSON file {\"re\":[[...]],\"im\":[[...]]}")->required();
  decompose_cmd->add_option("--tol", decompose_tol, "unitarity/determinant tolerance")->capture_default_str();

  auto* haar_cmd = app.add_subcommand("haar", "Haar-distributed chart samples as CSV");
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string ranges = "covering";
  haar_cmd->add_option("--n", n, "number of samples")->capture_default_str();
  haar_cmd->add_option("--seed", seed)->capture_default_str();
  haar_cmd->add_option("--out", out_path, "CSV path (stdout if omitted)");
  haar_cmd->add_option("--ranges", ranges, "fundamental domain")
      ->check(CLI::IsMember({"covering", "standard"}))
      ->capture_default_str();

  auto* phase_cmd = app.add_subcommand("phase", "Geometric phase around a closed loop");
  std::string loop_path, method = "connection";
  bool include_dphi = false;
  phase_cmd->add_option("--loop", loop_path, "loop JSON file")->required();
  phase_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"connection", "pancharatnam", "curvature"}))
      ->capture_default_str();
  phase_cmd->add_flag("--include-dphi", include_dphi, "keep the -(2/sqrt3) dphi term");

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  std::string level = "quick";
  std::uint64_t verify_seed = 1;
  double verify_tol = 1e-12;
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed)->capture_default_str();
  verify_cmd->add_option("--tol", verify_tol, "threshold for exact matrix residuals")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*compose_cmd) return cmd_compose(angles_arg, positional);
    if (*decompose_cmd) return cmd_decompose(matrix_path, decompose_tol);
    if (*haar_cmd) return cmd_haar(n, seed, out_path, ranges);
    if (*phase_cmd) return cmd_phase(loop_path, method, include_dphi);
    if (*verify_cmd) return cmd_verify(level, verify_seed, verify_tol);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}
