#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "spherepack/geometry.hpp"

namespace spherepack {

class RecordTable;

enum class ViolationKind { Wall, Pair };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::Wall;
  std::vector<std::size_t> indices;  // one sphere for Wall, two for Pair (0-based)
  double magnitude = 0.0;            // how far the constraint is broken, > 0
};

struct Certificate {
  bool valid = false;
  // min over spheres of (r0 - r) - |X_i| (sphere) or (r0 - r) - max_c |c| (cube)
  double worst_wall_margin = 0.0;
  // min over pairs of |X_i - X_j| - 2r; +inf for a single sphere
  double worst_pair_margin = 0.0;
  // The same margins lowered by a bound on their evaluation rounding error.
  double conservative_wall_margin = 0.0;
  double conservative_pair_margin = 0.0;
  std::vector<Violation> violations;

  // True when the margins stay nonnegative even after the rounding allowance.
  bool robust() const { return conservative_wall_margin >= 0.0 && conservative_pair_margin >= 0.0; }
};

// Checks containment and non-overlap for spheres of radius 0.5 with plain
// floating-point comparisons and no slack.
Certificate verify_exact(std::span<const Point3> centers, double r0, ContainerKind kind);
// Uses the centers only; the configuration's own radius is ignored.
Certificate verify_exact(const Configuration& config, double r0, ContainerKind kind);

struct FakeCheck {
  bool packed = false;  // energy < 1e-16
  double energy = 0.0;  // U at radius 0.5 + 1e-8
};

// Evaluates the energy of the centers as inflated spheres. A true verdict
// implies verify_exact passes.
FakeCheck verify_fake(std::span<const Point3> centers, double r0, ContainerKind kind);
FakeCheck verify_fake(const Configuration& config, double r0, ContainerKind kind);

// ratio minus the tabulated ratio; positive means denser than the record.
// Throws NotInTable for unknown (n, kind).
double compare_to_record(const RecordTable& table, std::size_t n, ContainerKind kind, double ratio);

}  // namespace spherepack
