#include "spherepack/radius_search.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "spherepack/records.hpp"

namespace spherepack {

std::string_view to_string(WarmStart mode) {
  return mode == WarmStart::PreviousProbe ? "previous-probe" : "last-packed";
}

SolveOutcome binary_search_radius(const Configuration& found, ContainerKind kind, double r0_start,
                                  double epsilon, const SolverSettings& settings, WarmStart warm_start) {
  if (!(r0_start > 0.0) || !std::isfinite(r0_start)) throw ParameterError("r0_start must be positive");
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");

  double r0_low = 0.5 * r0_start;
  double r0_up = 2.0 * r0_start;
  const LocalResult top = a0_solve(found, Container(kind, r0_up), settings);
  if (top.status != SolveStatus::Packed) throw UpperBoundInfeasible(r0_up, top.final_energy);

  SolveOutcome outcome(found);
  outcome.kind = kind;
  outcome.r0_start = r0_start;
  Configuration x = found;
  // Halt configuration of the probe that set r0_up; packed at r0_up.
  Configuration at_upper = top.configuration;
  while (r0_up - r0_low > epsilon) {
    const double r0 = 0.5 * (r0_up + r0_low);
    const Configuration& start = warm_start == WarmStart::LastPacked ? at_upper : x;
    LocalResult probe = a0_solve(start, Container(kind, r0), settings);
    const bool packed = probe.status == SolveStatus::Packed;
    x = std::move(probe.configuration);
    if (packed) {
      r0_up = r0;
      at_upper = x;
    } else {
      r0_low = r0;
    }
    outcome.trace.push_back({r0, packed, probe.final_energy, r0_low, r0_up});
  }
  assert(at_upper.size() == found.size());

  outcome.r0_min = r0_up;
  outcome.search_iterations = outcome.trace.size();
  LocalResult dense =
      a0_solve(warm_start == WarmStart::LastPacked ? at_upper : x, Container(kind, r0_up), settings);
  // A halt configuration from a failed probe need not re-pack at r0_up; the
  // probe that set r0_up already holds a packing there.
  const Configuration& packing =
      dense.status == SolveStatus::Packed ? dense.configuration : at_upper;
  outcome.dense_packing = packing.with_radius(kStandardRadius);
  outcome.ratio = kStandardRadius / outcome.r0_min;
  outcome.certificate = verify_exact(outcome.dense_packing, outcome.r0_min, kind);
  if (!outcome.certificate.valid) {
    throw std::logic_error("dense packing failed exact verification at r0 = " +
                           std::to_string(outcome.r0_min));
  }
  return outcome;
}

SolveOutcome minimize_radius(const Configuration& found, ContainerKind kind, double r0_start,
                             double epsilon, const SolverSettings& settings, WarmStart warm_start,
                             std::size_t max_retries) {
  for (std::size_t retry = 0;; ++retry) {
    try {
      SolveOutcome outcome = binary_search_radius(found, kind, r0_start, epsilon, settings, warm_start);
      outcome.metadata.upper_bound_retries = retry;
      return outcome;
    } catch (const UpperBoundInfeasible&) {
      if (retry >= max_retries) throw;
      r0_start *= 2.0;
    }
  }
}

std::size_t bisection_iteration_bound(double r0_start, double epsilon) {
  return static_cast<std::size_t>(std::ceil(std::log2((2.0 * r0_start - 0.5 * r0_start) / epsilon))) + 1;
}

SolveOutcome solve_instance(const RunParameters& params) {
  const auto started = std::chrono::steady_clock::now();
  const double r0 =
      params.r0_estimate > 0.0 ? params.r0_estimate : default_r0_estimate(params.n, params.kind);
  const SearchState search = a1_search(params.n, params.kind, r0, params.seed, params.scan_limit,
                                       params.settings, params.workers);
  SolveOutcome outcome = minimize_radius(search.found(), params.kind, r0, params.epsilon,
                                         params.settings, params.warm_start,
                                         params.max_upper_bound_retries);
  auto& meta = outcome.metadata;
  meta.seed = params.seed;
  meta.r0_estimate = r0;
  meta.scan_count = search.scan_count;
  meta.scan_best_energies = search.scan_best_energies;
  meta.a0_calls = search.a0_calls;
  meta.packed_during_search = search.packed.has_value();
  meta.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return outcome;
}

}  // namespace spherepack
