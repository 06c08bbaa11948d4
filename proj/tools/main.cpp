#include <iostream>
#include <vector>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "spherepack/relocation.hpp"

int main(int argc, char** argv) {
  using namespace spherepack;

  CLI::App app{"Dense packings of equal spheres in a sphere or a cube"};
  app.require_subcommand(1);
  const std::vector<std::string> kinds{"sphere", "cube"};

  cli::SolveOptions solve;
  solve.workers = default_worker_count();
  auto* solve_cmd = app.add_subcommand("solve", "Pack n spheres and report the best ratio r/r0");
  solve_cmd->add_option("--n", solve.n, "Number of spheres")->required()->check(CLI::PositiveNumber);
  std::string solve_kind;
  solve_cmd->add_option("--kind", solve_kind, "Container: sphere or cube")
      ->required()
      ->check(CLI::IsMember(kinds));
  solve_cmd->add_option("--r0", solve.r0, "Container radius to search at (default: from records)");
  solve_cmd->add_option("--seed", solve.seed, "Seed of the first run");
  solve_cmd->add_option("--runs", solve.runs, "Independent runs; the best is kept")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--scan-limit", solve.scan_limit, "Relocation scans per run");
  solve_cmd->add_option("--eps", solve.epsilon, "Radius bisection precision");
  solve_cmd->add_option("--out", solve.out_path, "Write the packing here and the run report to <out>.json");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a packing file at sphere radius 0.5");
  verify_cmd->add_option("path", verify_path, "Packing file")->required();

  cli::BenchOptions bench;
  bench.workers = default_worker_count();
  auto* bench_cmd = app.add_subcommand("bench", "Sweep n and compare with the record table");
  std::string bench_kind;
  bench_cmd->add_option("--kind", bench_kind, "Container: sphere or cube")
      ->required()
      ->check(CLI::IsMember(kinds));
  bench_cmd->add_option("--n-min", bench.n_min, "First n")->required();
  bench_cmd->add_option("--n-max", bench.n_max, "Last n")->required();
  bench_cmd->add_option("--runs", bench.runs, "Runs per n");
  bench_cmd->add_option("--seed", bench.seed, "Seed of the first run");
  bench_cmd->add_option("--scan-limit", bench.scan_limit, "Relocation scans per run");
  bench_cmd->add_option("--eps", bench.epsilon, "Radius bisection precision");
  bench_cmd->add_option("--out", bench.csv_path, "CSV copy of the table");

  std::string plot_in, plot_out, plot_format = "csv";
  auto* plot_cmd = app.add_subcommand("plotdata", "Export a packing for external 3D plotting");
  plot_cmd->add_option("path", plot_in, "Packing file")->required();
  plot_cmd->add_option("--out", plot_out, "Output file")->required();
  plot_cmd->add_option("--format", plot_format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  if (*solve_cmd) solve.kind = parse_container_kind(solve_kind);
  if (*bench_cmd) bench.kind = parse_container_kind(bench_kind);
  try {
    if (*solve_cmd) return cli::cmd_solve(solve, std::cout, std::cerr).exit_code;
    if (*verify_cmd) return cli::cmd_verify(verify_path, std::cout, std::cerr);
    if (*bench_cmd) return cli::cmd_bench(bench, std::cout, std::cerr);
    if (*plot_cmd) return cli::cmd_plotdata(plot_in, plot_out, plot_format, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitFailure;
  }
  return cli::kExitUsage;
}
