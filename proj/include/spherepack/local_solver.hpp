#pragma once

#include <cstddef>
#include <string_view>

#include "spherepack/energy.hpp"
#include "spherepack/geometry.hpp"

namespace spherepack {

enum class DescentMethod { Lbfgs, SteepestDescent };

struct SolverSettings {
  double success_threshold = 1e-16;
  // Floor of the iteration budget; scaled by n / 10 for larger instances.
  std::size_t max_iterations = 2'000'000;
  double stall_gradient_norm = 1e-14;
  // Also stalled when U falls by less than this fraction over stall_window
  // accepted steps (cone-shaped minima never shrink the gradient).
  double stall_relative_decrease = 1e-10;
  std::size_t stall_window = 100;
  // Length of the first trial move, as a fraction of r0.
  double initial_step = 1e-2;
  double step_shrink = 0.5;
  double step_grow = 1.2;
  DescentMethod method = DescentMethod::Lbfgs;
  std::size_t lbfgs_memory = 8;

  // Throws ParameterError on inconsistent values.
  void validate() const;
  std::size_t iteration_budget(std::size_t n) const;
};

enum class SolveStatus { Packed, Stalled, IterationLimit };

std::string_view to_string(SolveStatus status);
std::string_view to_string(DescentMethod method);

struct LocalResult {
  Configuration configuration;  // X_halt
  double final_energy = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::Stalled;
};

// Drives U(X, r, r0) down by monotone descent until it drops below the
// success threshold, no further decrease is possible, or the budget runs out.
// Deterministic in its inputs.
LocalResult a0_solve(const Configuration& config, const Container& container,
                     const SolverSettings& settings = {});

}  // namespace spherepack
