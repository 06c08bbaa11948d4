#include "spherepack/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spherepack/energy.hpp"
#include "spherepack/records.hpp"

namespace spherepack {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon();

// Distance from the center to the wall measure used by the containment constraint.
double wall_extent(const Point3& c, ContainerKind kind) {
  if (kind == ContainerKind::Sphere) return c.norm();
  return std::max({std::abs(c.x), std::abs(c.y), std::abs(c.z)});
}

}  // namespace

std::string_view to_string(ViolationKind kind) { return kind == ViolationKind::Wall ? "wall" : "pair"; }

Certificate verify_exact(std::span<const Point3> centers, double r0, ContainerKind kind) {
  constexpr double r = kStandardRadius;
  constexpr double inf = std::numeric_limits<double>::infinity();
  Certificate cert;
  cert.worst_wall_margin = inf;
  cert.worst_pair_margin = inf;
  cert.conservative_wall_margin = inf;
  cert.conservative_pair_margin = inf;

  const double reach = r0 - r;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const double extent = wall_extent(centers[i], kind);
    const double margin = reach - extent;
    cert.worst_wall_margin = std::min(cert.worst_wall_margin, margin);
    cert.conservative_wall_margin =
        std::min(cert.conservative_wall_margin, margin - 4.0 * kUnitRoundoff * (r0 + extent));
    if (!(extent <= reach)) cert.violations.push_back({ViolationKind::Wall, {i}, extent - reach});
  }
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      const double dist = distance(centers[i], centers[j]);
      const double margin = dist - 2.0 * r;
      cert.worst_pair_margin = std::min(cert.worst_pair_margin, margin);
      cert.conservative_pair_margin =
          std::min(cert.conservative_pair_margin, margin - 4.0 * kUnitRoundoff * (dist + 2.0 * r));
      if (!(dist >= 2.0 * r)) cert.violations.push_back({ViolationKind::Pair, {i, j}, 2.0 * r - dist});
    }
  }
  cert.valid = cert.worst_wall_margin >= 0.0 && cert.worst_pair_margin >= 0.0;
  return cert;
}

Certificate verify_exact(const Configuration& config, double r0, ContainerKind kind) {
  return verify_exact(config.centers(), r0, kind);
}

FakeCheck verify_fake(std::span<const Point3> centers, double r0, ContainerKind kind) {
  if (centers.empty()) return {true, 0.0};
  const Configuration fake({centers.begin(), centers.end()}, kFakeRadius);
  const double energy = total_energy(fake, Container(kind, r0)).total;
  return {energy < 1e-16, energy};
}

FakeCheck verify_fake(const Configuration& config, double r0, ContainerKind kind) {
  return verify_fake(config.centers(), r0, kind);
}

double compare_to_record(const RecordTable& table, std::size_t n, ContainerKind kind, double ratio) {
  return ratio - table.at(n, kind);
}

}  // namespace spherepack
