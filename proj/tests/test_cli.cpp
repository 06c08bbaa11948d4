#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>
#include <unistd.h>

#include "../tools/commands.hpp"
#include "spherepack/packing_io.hpp"

using namespace spherepack;
using namespace spherepack::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("spherepack_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

struct ValueLine {
  std::size_t n = 0;
  std::string kind;
  double ratio = 0.0;
  double r0_min = 0.0;
  std::string delta;
};

ValueLine value_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line) && line != "n kind ratio r0_min delta") {
  }
  REQUIRE(std::getline(in, line));
  ValueLine v;
  std::istringstream fields(line);
  fields >> v.n >> v.kind >> v.ratio >> v.r0_min >> v.delta;
  return v;
}

SolveResult solve(std::size_t n, ContainerKind kind, std::string& text, std::size_t runs = 1) {
  SolveOptions o;
  o.n = n;
  o.kind = kind;
  o.runs = runs;
  std::ostringstream out, err;
  auto result = cmd_solve(o, out, err);
  text = out.str();
  return result;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("solve prints the ratio table") {
  std::string text;
  SUBCASE("two spheres in a sphere") {
    const auto r = solve(2, ContainerKind::Sphere, text);
    CHECK(r.exit_code == kExitOk);
    const auto v = value_line(text);
    CHECK(v.n == 2);
    CHECK(v.kind == "sphere");
    CHECK(v.ratio == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(std::abs(std::stod(v.delta)) <= 1e-8);
    CHECK(text.find("# timing total_seconds") != std::string::npos);
  }
  SUBCASE("one sphere in a cube") {
    const auto r = solve(1, ContainerKind::Cube, text);
    CHECK(r.exit_code == kExitOk);
    CHECK(value_line(text).ratio == doctest::Approx(1.0).epsilon(1e-7));
  }
  SUBCASE("three spheres in a sphere") {
    const auto r = solve(3, ContainerKind::Sphere, text, 2);
    CHECK(r.exit_code == kExitOk);
    CHECK(value_line(text).ratio == doctest::Approx(2 * std::sqrt(3.0) - 3).epsilon(1e-6));
    REQUIRE(r.best.has_value());
    CHECK(r.best->certificate.valid);
    REQUIRE(r.report.has_value());
    CHECK(r.report->n == 3);
  }
}

TEST_CASE("solve writes files that verify accepts") {
  const auto dir = scratch_dir();
  SolveOptions o;
  o.n = 4;
  o.kind = ContainerKind::Cube;
  o.runs = 1;
  o.out_path = (dir / "p4.txt").string();
  std::ostringstream out, err;
  REQUIRE(cmd_solve(o, out, err).exit_code == kExitOk);
  CHECK(fs::exists(dir / "p4.txt.json"));
  CHECK(load_report(dir / "p4.txt.json").n == 4);

  std::ostringstream vout, verr;
  CHECK(cmd_verify((dir / "p4.txt").string(), vout, verr) == kExitOk);
  CHECK(vout.str().find("valid") != std::string::npos);

  std::ofstream(dir / "bad.txt") << "n=2\nkind=sphere\nr0=1\nr=0.5\n1 -0.45 0 0\n2 0.45 0 0\n";
  std::ostringstream bout, berr;
  CHECK(cmd_verify((dir / "bad.txt").string(), bout, berr) == kExitFailure);
  CHECK(bout.str().find("invalid") != std::string::npos);
  CHECK(bout.str().find("pair 1 2") != std::string::npos);

  std::ofstream(dir / "junk.txt") << "hello\n";
  std::ostringstream jout, jerr;
  CHECK(cmd_verify((dir / "junk.txt").string(), jout, jerr) == kExitUsage);
  CHECK(cmd_verify((dir / "missing.txt").string(), jout, jerr) == kExitUsage);
  fs::remove_all(dir);
}

TEST_CASE("bench") {
  const auto dir = scratch_dir();
  BenchOptions o;
  o.kind = ContainerKind::Sphere;
  o.n_min = 4;
  o.n_max = 2;
  std::ostringstream out, err;
  CHECK(cmd_bench(o, out, err) == kExitUsage);

  o.n_min = 1;
  o.n_max = 4;
  o.runs = 1;
  o.csv_path = (dir / "bench.csv").string();
  std::vector<BenchRow> rows;
  CHECK(cmd_bench(o, out, err, &rows) == kExitOk);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row.error.empty());
    REQUIRE(row.best_ratio.has_value());
    REQUIRE(row.delta.has_value());
    CHECK(*row.delta > -1e-4);
  }
  const auto csv = read_file(dir / "bench.csv");
  CHECK(csv.rfind("kind,n,best_ratio,record,delta,mean_seconds,error", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  fs::remove_all(dir);
}

TEST_CASE("plotdata") {
  const auto dir = scratch_dir();
  std::ofstream(dir / "p.txt") << "n=2\nkind=cube\nr0=1\nr=0.5\n1 -0.5 0 0\n2 0.5 0 0\n";
  std::ostringstream err;
  CHECK(cmd_plotdata((dir / "p.txt").string(), (dir / "p.csv").string(), "csv", err) == kExitOk);
  const auto csv = read_file(dir / "p.csv");
  CHECK(csv.rfind("i,x,y,z,radius,kind,r0\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  CHECK(cmd_plotdata((dir / "p.txt").string(), (dir / "p.json").string(), "json", err) == kExitOk);
  const auto j = nlohmann::json::parse(read_file(dir / "p.json"));
  CHECK(j.at("kind") == "cube");
  CHECK(j.at("r0").get<double>() == 1.0);
  CHECK(j.at("centers").size() == 2);

  CHECK(cmd_plotdata((dir / "p.txt").string(), (dir / "p.x").string(), "xml", err) == kExitUsage);
  CHECK(cmd_plotdata((dir / "nothing.txt").string(), (dir / "p.x").string(), "csv", err) == kExitUsage);
  fs::remove_all(dir);
}

TEST_CASE("the binary closes the loop") {
  const auto dir = scratch_dir();
  const std::string cli = SPHEREPACK_CLI_PATH;
  const std::string packing = (dir / "five.txt").string();
  CHECK(run(cli + " solve --n 5 --kind sphere --runs 1 --out " + packing) == 0);
  CHECK(run(cli + " verify " + packing) == 0);
  CHECK(run(cli + " plotdata " + packing + " --out " + (dir / "five.csv").string() + " --format csv") == 0);
  CHECK(run(cli + " solve --kind sphere") == 2);
  CHECK(run(cli + " solve --n 3 --kind torus") == 2);
  CHECK(run(cli + " verify " + (dir / "absent.txt").string()) == 2);
  fs::remove_all(dir);
}
