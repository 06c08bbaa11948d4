#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "spherepack/geometry.hpp"
#include "spherepack/local_solver.hpp"
#include "spherepack/relocation.hpp"
#include "spherepack/verification.hpp"

namespace spherepack {

inline constexpr double kDefaultEpsilon = 1e-12;
inline constexpr std::size_t kDefaultUpperBoundRetries = 8;

// Which configuration each bisection probe starts from.
enum class WarmStart {
  // The previous probe's halt configuration, packed or not.
  PreviousProbe,
  // The halt configuration of the probe that last succeeded, so a failed
  // (over-compressed) probe never feeds the next one.
  LastPacked,
};

std::string_view to_string(WarmStart mode);

// One bisection step: the radius tried, its outcome, and the bracket after it.
struct Probe {
  double r0 = 0.0;
  bool packed = false;
  double energy = 0.0;
  double r0_low = 0.0;
  double r0_up = 0.0;
};

struct RunMetadata {
  std::uint64_t seed = 0;
  double r0_estimate = 0.0;
  std::size_t scan_count = 0;
  std::vector<double> scan_best_energies;
  std::size_t a0_calls = 0;
  bool packed_during_search = false;
  std::size_t upper_bound_retries = 0;
  double wall_seconds = 0.0;  // excluded from determinism guarantees
};

struct SolveOutcome {
  explicit SolveOutcome(Configuration packing) : dense_packing(std::move(packing)) {}

  Configuration dense_packing;  // centers of radius-0.5 spheres
  double r0_min = 0.0;
  double ratio = 0.0;  // 0.5 / r0_min
  ContainerKind kind = ContainerKind::Sphere;
  std::size_t search_iterations = 0;
  double r0_start = 0.0;  // the bracket began at [r0_start / 2, 2 * r0_start]
  std::vector<Probe> trace;
  Certificate certificate;
  RunMetadata metadata;
};

// Bisects the container radius between r0_start / 2 and 2 * r0_start for the
// smallest one in which A0 develops `found` into a packing. Probes are warm
// started per `warm_start`. Throws UpperBoundInfeasible if `found` does not
// pack at the upper bound.
SolveOutcome binary_search_radius(const Configuration& found, ContainerKind kind, double r0_start,
                                  double epsilon = kDefaultEpsilon, const SolverSettings& settings = {},
                                  WarmStart warm_start = WarmStart::LastPacked);

// binary_search_radius, doubling r0_start after each infeasible upper bound.
SolveOutcome minimize_radius(const Configuration& found, ContainerKind kind, double r0_start,
                             double epsilon = kDefaultEpsilon, const SolverSettings& settings = {},
                             WarmStart warm_start = WarmStart::LastPacked,
                             std::size_t max_retries = kDefaultUpperBoundRetries);

// ceil(log2((2 r0 - r0 / 2) / epsilon)) + 1
std::size_t bisection_iteration_bound(double r0_start, double epsilon);

struct RunParameters {
  std::size_t n = 1;
  ContainerKind kind = ContainerKind::Sphere;
  double r0_estimate = 0.0;  // <= 0 selects default_r0_estimate
  std::uint64_t seed = 0;
  std::size_t scan_limit = kDefaultScanLimit;
  double epsilon = kDefaultEpsilon;
  SolverSettings settings;
  std::size_t workers = 1;
  WarmStart warm_start = WarmStart::LastPacked;
  std::size_t max_upper_bound_retries = kDefaultUpperBoundRetries;
};

// One complete run: relocation search at the estimated radius, then radius
// minimization of the configuration it found.
SolveOutcome solve_instance(const RunParameters& params);

}  // namespace spherepack
