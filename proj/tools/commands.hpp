#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spherepack/packing_io.hpp"
#include "spherepack/radius_search.hpp"

namespace spherepack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct SolveOptions {
  std::size_t n = 1;
  ContainerKind kind = ContainerKind::Sphere;
  std::optional<double> r0;
  std::uint64_t seed = 1;
  std::size_t runs = 5;
  std::size_t scan_limit = kDefaultScanLimit;
  double epsilon = kDefaultEpsilon;
  std::optional<std::string> out_path;  // packing file; the report goes to <out>.json
  std::size_t workers = 1;
};

struct SolveResult {
  int exit_code = kExitFailure;
  std::optional<SolveOutcome> best;
  std::optional<RunReport> report;
};

// Best of `runs` runs with seeds seed, seed + 1, ...
SolveResult cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);

// 0 when the packing certifies, 1 when it does not, 2 when the file is unreadable.
int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err);

struct BenchOptions {
  ContainerKind kind = ContainerKind::Sphere;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::size_t runs = 5;
  std::uint64_t seed = 1;
  std::size_t scan_limit = kDefaultScanLimit;
  double epsilon = kDefaultEpsilon;
  std::optional<std::string> csv_path;
  std::size_t workers = 1;
};

struct BenchRow {
  std::size_t n = 0;
  std::optional<double> best_ratio;
  std::optional<double> record;
  std::optional<double> delta;
  double mean_seconds = 0.0;
  std::string error;  // empty when at least one run succeeded
};

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err,
              std::vector<BenchRow>* rows = nullptr);

// format is "csv" or "json".
int cmd_plotdata(const std::string& packing_path, const std::string& out_path,
                 const std::string& format, std::ostream& err);

}  // namespace spherepack::cli
