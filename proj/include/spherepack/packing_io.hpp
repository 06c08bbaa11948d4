#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "spherepack/geometry.hpp"
#include "spherepack/radius_search.hpp"

namespace spherepack {

// Contents of a packing file:
//   n=<count>
//   kind=<sphere|cube>
//   r0=<decimal>
//   r=0.5
//   <i> <x> <y> <z>     (n lines, i = 1..n)
struct PackingFile {
  ContainerKind kind = ContainerKind::Sphere;
  double r0 = 0.0;
  double r = kStandardRadius;
  std::vector<Point3> centers;

  Configuration configuration() const { return {centers, r}; }
};

// Writes every real with 17 significant digits.
void write_packing(std::ostream& out, std::span<const Point3> centers, ContainerKind kind, double r0);
void save_packing(const SolveOutcome& outcome, const std::filesystem::path& path);

PackingFile parse_packing(std::istream& in, const std::string& source);
// Throws ParseError with the offending line.
PackingFile load_packing(const std::filesystem::path& path);

// Everything needed to replay a run and the outcome it produced.
struct RunReport {
  std::size_t n = 0;
  ContainerKind kind = ContainerKind::Sphere;
  std::uint64_t seed = 0;
  double r0_estimate = 0.0;
  std::size_t scan_limit = kDefaultScanLimit;
  double epsilon = kDefaultEpsilon;
  SolverSettings settings;
  std::vector<double> scan_best_energies;
  std::size_t scan_count = 0;
  std::size_t a0_calls = 0;
  std::size_t search_iterations = 0;
  double ratio = 0.0;
  double r0_min = 0.0;
  double wall_seconds = 0.0;
  std::vector<Point3> centers;
};

RunReport make_report(const RunParameters& params, const SolveOutcome& outcome);
RunParameters replay_parameters(const RunReport& report);

std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text, const std::string& source = "<report>");
void save_report(const RunReport& report, const std::filesystem::path& path);
RunReport load_report(const std::filesystem::path& path);

}  // namespace spherepack
