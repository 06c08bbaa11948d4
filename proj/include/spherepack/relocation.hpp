#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spherepack/geometry.hpp"
#include "spherepack/local_solver.hpp"

namespace spherepack {

inline constexpr std::size_t kDefaultScanLimit = 6;

// The i members of `set` with the smallest energies; ties go to the lower index.
IndexSet min_u(std::size_t i, const IndexSet& set, std::span<const double> per_sphere);
// The j members of `set` with the largest energies; ties go to the lower index.
IndexSet max_u(std::size_t j, const IndexSet& set, std::span<const double> per_sphere);

struct ScanCandidate {
  std::size_t i = 0;  // 1-based, 2..n
  std::size_t j = 0;  // 1-based, 1..i-1
  IndexSet subset;    // max_u(j, min_u(i, all spheres))
};

// All n(n-1)/2 relocation candidates of one scan in lexicographic (i, j)
// order. Energies are taken once from `local`.
std::vector<ScanCandidate> scan_candidates(const Configuration& local, const Container& container);

struct SearchState {
  Configuration current_local;
  double current_energy = 0.0;
  Configuration best_found;  // lowest energy seen so far
  double best_energy = 0.0;
  std::size_t scan_count = 0;
  std::optional<Configuration> packed;  // first configuration reaching the threshold
  std::vector<double> scan_best_energies;  // lowest energy of each completed scan
  std::size_t a0_calls = 0;

  const Configuration& found() const { return packed ? *packed : best_found; }
};

// One run of the serial symmetrical relocation search at a fixed container
// radius with fake spheres. Candidate solves may run on `workers` threads;
// the result is always the one the serial order produces.
SearchState a1_search(std::size_t n, ContainerKind kind, double r0_estimate, std::uint64_t seed,
                      std::size_t scan_limit = kDefaultScanLimit, const SolverSettings& settings = {},
                      std::size_t workers = 1);

// Worker count from SPHEREPACK_THREADS, else the hardware concurrency.
std::size_t default_worker_count();

}  // namespace spherepack
