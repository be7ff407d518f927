#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "oracles.hpp"
#include "su3/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("su3tool_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    std::atexit([] {
      std::error_code ec;
      fs::remove_all(fs::temp_directory_path() / ("su3tool_test_" + std::to_string(::getpid())), ec);
    });
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string(SU3TOOL_PATH) + " " + args + " 2>" + err.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err)};
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("compose") {
  auto r = run("compose 0 0 0 0 0 0 0 0");
  REQUIRE(r.code == 0);
  const auto m = su3::io::matrix_from_json(json::parse(r.out));
  CHECK(m == su3::Mat3::Identity());
  CHECK(r.err.find("unitarity residual") != std::string::npos);

  r = run(R"(compose --angles '{"alpha":0.1,"beta":0.2,"gamma":0.3,"theta":0.4,"a":0.5,"b":0.6,"c":0.7,"phi":0.8}')");
  REQUIRE(r.code == 0);
  const auto u = su3::io::matrix_from_json(json::parse(r.out));
  CHECK(oracle::max_abs(u - oracle::euler({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8})) < 1e-14);
  std::istringstream err(r.err);
  std::string word;
  double residual = 1;
  err >> word >> word >> residual;
  CHECK(residual <= 1e-12);

  const auto file = write("angles.json", "[0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8]");
  CHECK(run("compose --angles " + file.string()).out == r.out);

  CHECK(run("compose 1 2 3").code == 2);
  CHECK(run("compose --angles '[1,2]'").code == 2);
  CHECK(run("compose --angles '{bad json'").code == 2);
  CHECK(run("compose --angles /nonexistent/angles.json").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("decompose round trip") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 5; ++k) {
    const auto a = oracle::interior_angles(rng);
    const auto in = write("m.json", su3::io::matrix_to_json(oracle::euler(a)).dump());
    const auto r = run("decompose --matrix " + in.string());
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["strata"]["theta_zero"] == false);
    const auto x = su3::io::angles_from_json(j["angles"]);
    CHECK(oracle::max_abs(oracle::euler(x.to_array()) - oracle::euler(a)) < 1e-10);
    CHECK(oracle::max_abs(su3::compose(x).matrix() - oracle::euler(a)) < 1e-10);
  }

  const auto ident = write("id.json", su3::io::matrix_to_json(su3::Mat3::Identity()).dump());
  const auto r = run("decompose --matrix " + ident.string());
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["strata"]["theta_zero"] == true);
  for (const char* k : {"alpha", "beta", "gamma", "theta", "a", "b", "c", "phi"}) CHECK(j["angles"][k] == 0.0);

  su3::Mat3 bad = su3::Mat3::Identity();
  bad(0, 1) = 0.01;
  const auto nonunitary = write("bad.json", su3::io::matrix_to_json(bad).dump());
  const auto rb = run("decompose --matrix " + nonunitary.string());
  CHECK(rb.code == 2);
  CHECK(rb.err.find("unitarity residual") != std::string::npos);
  CHECK(rb.out.empty());

  // within 1e-8 is accepted
  su3::Mat3 near = su3::Mat3::Identity();
  near(0, 0) += 1e-10;
  CHECK(run("decompose --matrix " + write("near.json", su3::io::matrix_to_json(near).dump()).string()).code == 0);
  CHECK(run("decompose --matrix " + write("junk.json", "{\"re\": 3}").string()).code == 2);
}

TEST_CASE("haar") {
  const auto a = scratch() / "a.csv", b = scratch() / "b.csv";
  REQUIRE(run("haar --n 1 --seed 0 --out " + a.string()).code == 0);
  REQUIRE(run("haar --n 1 --seed 0 --out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("alpha,beta,gamma,theta,a,b,c,phi\n", 0) == 0);

  const auto big = scratch() / "big.csv";
  REQUIRE(run("haar --n 100000 --seed 3 --ranges standard --out " + big.string()).code == 0);
  std::ifstream in(big);
  std::string line;
  std::getline(in, line);
  double m = 0, m2 = 0;
  std::size_t n = 0;
  bool ranges_ok = true;
  const double pi = oracle::pi;
  const std::array<double, 8> hi = {pi, pi / 2, pi, pi / 2, pi, pi / 2, pi, oracle::r3 * pi};
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::array<double, 8> x;
    for (int k = 0; k < 8; ++k) {
      std::getline(cells, cell, ',');
      x[k] = std::stod(cell);
      const bool closed = k == 1 || k == 3 || k == 5;
      ranges_ok = ranges_ok && x[k] >= 0 && (closed ? x[k] <= hi[k] : x[k] < hi[k]);
    }
    const double s = std::pow(std::sin(x[3]), 2);
    m += s;
    m2 += s * s;
    ++n;
  }
  CHECK(n == 100000);
  CHECK(ranges_ok);
  m /= n;
  CHECK(std::abs(m - 2.0 / 3.0) <= 3 * std::sqrt((m2 / n - m * m) / (n - 1)));

  const auto stdout_run = run("haar --n 3 --seed 1");
  CHECK(stdout_run.code == 0);
  CHECK(std::count(stdout_run.out.begin(), stdout_run.out.end(), '\n') == 4);

  CHECK(run("haar --n 5 --out /nonexistent-dir/x.csv").code == 3);
  CHECK(run("haar --n 0").code == 2);
  CHECK(run("haar --n 5 --ranges sideways").code == 2);
}

TEST_CASE("phase") {
  const double pi = oracle::pi;
  json loop = {{"waypoints", {{0, 0, 0, pi / 4, 0, 0, 0, 0}, {0, 0, 2 * pi, pi / 4, 0, 0, 0, 0}}},
               {"samples_per_segment", 10000}};
  const auto f = write("circle.json", loop.dump());
  auto r = run("phase --loop " + f.string() + " --method connection");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["method"] == "connection");
  CHECK(std::abs(j["phase_rad"].get<double>() - pi) < 1e-6);
  CHECK(j["samples"] == 10001);
  r = run("phase --loop " + f.string() + " --method pancharatnam");
  REQUIRE(r.code == 0);
  CHECK(std::abs(json::parse(r.out)["phase_rad"].get<double>() - pi) < 1e-4);

  json rect = {{"waypoints",
                {{0, 0, 0, 0, 0, 0, 0, 0},
                 {0, 0, 0, pi / 4, 0, 0, 0, 0},
                 {0, 0, 2 * pi, pi / 4, 0, 0, 0, 0},
                 {0, 0, 2 * pi, 0, 0, 0, 0, 0},
                 {0, 0, 0, 0, 0, 0, 0, 0}}},
               {"samples_per_segment", 2000}};
  const auto rf = write("rect.json", rect.dump());
  r = run("phase --loop " + rf.string() + " --method curvature");
  REQUIRE(r.code == 0);
  CHECK(std::abs(json::parse(r.out)["phase_rad"].get<double>() - pi) < 1e-6);
  r = run("phase --loop " + rf.string() + " --method connection");
  CHECK(std::abs(json::parse(r.out)["phase_rad"].get<double>() - pi) < 1e-6);
  CHECK(run("phase --loop " + f.string() + " --method curvature").code == 2);

  // φ winding shows up only with --include-dphi
  json wind = {{"waypoints", {{0, 0.3, 0, 0.5, 0, 0, 0, 0}, {0, 0.3, 0, 0.5, 0, 0, 0, 2 * oracle::r3 * pi}}},
               {"samples_per_segment", 500}};
  const auto wf = write("wind.json", wind.dump());
  r = run("phase --loop " + wf.string() + " --include-dphi");
  CHECK(json::parse(r.out)["phase_rad"].get<double>() == doctest::Approx(-4 * pi));

  json open = loop;
  open["waypoints"][1][2] = 1.0;
  const auto of = write("open.json", open.dump());
  r = run("phase --loop " + of.string());
  CHECK(r.code == 2);
  CHECK(r.err.find("not closed") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run("phase --loop " + f.string() + " --method spline").code == 2);
}

TEST_CASE("verify") {
  auto r = run("verify --level quick --seed 3");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() > 20);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["residual"].get<double>() <= c["threshold"].get<double>());
  }
  const auto cat = j["appendix_audit"]["discrepancies"];
  CHECK(cat.size() > 0);

  // a different seed draws different samples but reaches the same verdicts and catalogue
  const json k = json::parse(run("verify --seed 4").out);
  CHECK(k["passed"] == true);
  CHECK(k["appendix_audit"]["discrepancies"].size() == cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(k["appendix_audit"]["discrepancies"][i]["table"] == cat[i]["table"]);
    CHECK(k["appendix_audit"]["discrepancies"][i]["row"] == cat[i]["row"]);
    CHECK(k["appendix_audit"]["discrepancies"][i]["col"] == cat[i]["col"]);
  }
  bool residuals_differ = false;
  for (std::size_t i = 0; i < j["checks"].size(); ++i)
    residuals_differ |= j["checks"][i]["residual"] != k["checks"][i]["residual"];
  CHECK(residuals_differ);

  // an impossible tolerance fails the exact checks
  r = run("verify --tol 1e-30");
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["passed"] == false);
  CHECK(run("verify --level medium").code == 2);
}
