#include "spherepack/relocation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "spherepack/energy.hpp"

namespace spherepack {

namespace {

template <class Before>
IndexSet select(std::size_t count, const IndexSet& set, std::span<const double> per_sphere,
                Before before) {
  if (count < 1 || count > set.size()) {
    throw ParameterError("selection size " + std::to_string(count) + " outside [1, " +
                         std::to_string(set.size()) + "]");
  }
  set.check_bounds(per_sphere.size());
  std::vector<std::size_t> order(set.begin(), set.end());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return before(per_sphere[a], per_sphere[b]);
  });
  order.resize(count);
  return IndexSet(std::move(order));
}

}  // namespace

IndexSet min_u(std::size_t i, const IndexSet& set, std::span<const double> per_sphere) {
  return select(i, set, per_sphere, std::less<double>{});
}

IndexSet max_u(std::size_t j, const IndexSet& set, std::span<const double> per_sphere) {
  return select(j, set, per_sphere, std::greater<double>{});
}

std::vector<ScanCandidate> scan_candidates(const Configuration& local, const Container& container) {
  const std::size_t n = local.size();
  std::vector<ScanCandidate> candidates;
  if (n < 2) return candidates;
  const EnergyReport energy = total_energy(local, container);
  const IndexSet everyone = IndexSet::all(n);
  candidates.reserve(n * (n - 1) / 2);
  for (std::size_t i = 2; i <= n; ++i) {
    const IndexSet low = min_u(i, everyone, energy.per_sphere);
    for (std::size_t j = 1; j < i; ++j) {
      candidates.push_back({i, j, max_u(j, low, energy.per_sphere)});
    }
  }
  return candidates;
}

namespace {

// Solves every candidate up to and including the first that packs. With
// several workers, later candidates may be solved speculatively; only the
// prefix ending at the earliest packed index is kept.
std::vector<std::optional<LocalResult>> run_scan(const std::vector<ScanCandidate>& candidates,
                                       const Configuration& local, const Container& container,
                                       const SolverSettings& settings, std::size_t workers) {
  std::vector<std::optional<LocalResult>> outcomes(candidates.size());
  auto solve = [&](std::size_t k) {
    outcomes[k] = a0_solve(invert_subset(candidates[k].subset, local), container, settings);
    return outcomes[k]->status == SolveStatus::Packed;
  };

  if (workers <= 1) {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (solve(k)) {
        outcomes.resize(k + 1);
        break;
      }
    }
    return outcomes;
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_packed{kNone};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= candidates.size() || k > first_packed.load()) return;
      if (solve(k)) {
        std::size_t seen = first_packed.load();
        while (k < seen && !first_packed.compare_exchange_weak(seen, k)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (const std::size_t k = first_packed.load(); k != kNone) outcomes.resize(k + 1);
  return outcomes;
}

}  // namespace

SearchState a1_search(std::size_t n, ContainerKind kind, double r0_estimate, std::uint64_t seed,
                      std::size_t scan_limit, const SolverSettings& settings, std::size_t workers) {
  if (n == 0) throw ParameterError("sphere count must be at least 1");
  settings.validate();
  const Container container(kind, r0_estimate);
  const double r = kFakeRadius;

  LocalResult first = a0_solve(random_configuration(n, container, r, seed), container, settings);
  SearchState state{first.configuration, first.final_energy, first.configuration, first.final_energy, 0, {}, {}, 1};
  if (first.status == SolveStatus::Packed) {
    state.packed = first.configuration;
    return state;
  }
  if (n < 2) return state;  // no relocation candidates exist

  while (state.scan_count < scan_limit) {
    const auto candidates = scan_candidates(state.current_local, container);
    const auto outcomes = run_scan(candidates, state.current_local, container, settings, workers);
    state.a0_calls += outcomes.size();

    const LocalResult* scan_best = nullptr;
    for (const auto& outcome : outcomes) {
      const LocalResult& result = *outcome;
      if (result.status == SolveStatus::Packed) {
        state.packed = result.configuration;
        state.best_found = result.configuration;
        state.best_energy = result.final_energy;
        state.scan_best_energies.push_back(result.final_energy);
        ++state.scan_count;
        return state;
      }
      if (!scan_best || result.final_energy < scan_best->final_energy) scan_best = &result;
    }

    state.current_local = scan_best->configuration;
    state.current_energy = scan_best->final_energy;
    state.scan_best_energies.push_back(scan_best->final_energy);
    if (scan_best->final_energy < state.best_energy) {
      state.best_found = scan_best->configuration;
      state.best_energy = scan_best->final_energy;
    }
    ++state.scan_count;
  }
  return state;
}

std::size_t default_worker_count() {
  if (const char* env = std::getenv("SPHEREPACK_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace spherepack
