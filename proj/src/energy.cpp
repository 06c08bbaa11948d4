#include "spherepack/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace spherepack {

namespace {

struct WallTerm {
  double squared = 0.0;  // d_i0^2
  double gx = 0.0, gy = 0.0, gz = 0.0;
};

double overflow(double coord, double r, double r0) { return std::max(0.0, std::abs(coord) + r - r0); }

double signum(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

WallTerm wall_term(double x, double y, double z, double r, const Container& container) {
  WallTerm term;
  const double r0 = container.r0();
  if (container.kind() == ContainerKind::Sphere) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    const double depth = norm + r - r0;
    if (depth > 0.0) {
      term.squared = depth * depth;
      if (norm > 0.0) {
        const double s = 2.0 * depth / norm;
        term.gx = s * x;
        term.gy = s * y;
        term.gz = s * z;
      }
    }
    return term;
  }
  const double ox = overflow(x, r, r0);
  const double oy = overflow(y, r, r0);
  const double oz = overflow(z, r, r0);
  term.squared = ox * ox + oy * oy + oz * oz;
  term.gx = 2.0 * ox * signum(x);
  term.gy = 2.0 * oy * signum(y);
  term.gz = 2.0 * oz * signum(z);
  return term;
}

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw ParameterError("sphere index " + std::to_string(i) + " out of range for n = " +
                         std::to_string(n));
  }
}

}  // namespace

double container_deformation(const Point3& center, double r, const Container& container) {
  return std::sqrt(wall_term(center.x, center.y, center.z, r, container).squared);
}

double pair_deformation(const Point3& a, const Point3& b, double r) {
  return 0.5 * std::max(0.0, 2.0 * r - distance(a, b));
}

double sphere_energy(std::size_t i, const Configuration& config, const Container& container) {
  check_index(i, config.size());
  const double r = config.radius();
  const double wall = container_deformation(config[i], r, container);
  CompensatedSum u;
  u.add(wall * wall);
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (j == i) continue;
    const double d = pair_deformation(config[i], config[j], r);
    u.add(d * d);
  }
  return u.value();
}

EnergyReport total_energy(const Configuration& config, const Container& container) {
  EnergyModel model(container, config.radius());
  const auto coords = config.flat();
  EnergyReport report;
  report.per_sphere.resize(config.size());
  report.total = model.per_sphere(coords, report.per_sphere);
  for (std::size_t i = 0; i < config.size(); ++i) {
    report.max_container_deformation =
        std::max(report.max_container_deformation,
                 container_deformation(config[i], config.radius(), container));
  }
  // The largest pair deformation belongs to the closest pair.
  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      min_dist = std::min(min_dist, distance(config[i], config[j]));
    }
  }
  if (config.size() > 1) {
    report.max_pair_deformation = 0.5 * std::max(0.0, 2.0 * config.radius() - min_dist);
  }
  return report;
}

std::vector<double> energy_gradient(const Configuration& config, const Container& container) {
  EnergyModel model(container, config.radius());
  const auto coords = config.flat();
  std::vector<double> grad(coords.size());
  model.value_and_gradient(coords, grad);
  return grad;
}

EnergyModel::EnergyModel(const Container& container, double r, PairSearch search)
    : container_(container), r_(r), search_(search) {
  if (!(r > 0.0)) throw ParameterError("sphere radius must be positive");
}

template <class PairVisitor>
void EnergyModel::visit_overlapping_pairs(std::span<const double> coords, PairVisitor&& visit) {
  const std::size_t n = coords.size() / 3;
  const double cutoff = 2.0 * r_;
  const double cutoff2 = cutoff * cutoff;
  auto check = [&](std::size_t i, std::size_t j) {
    const double dx = coords[3 * i] - coords[3 * j];
    const double dy = coords[3 * i + 1] - coords[3 * j + 1];
    const double dz = coords[3 * i + 2] - coords[3 * j + 2];
    const double dist2 = dx * dx + dy * dy + dz * dz;
    if (dist2 < cutoff2) visit(i, j, dx, dy, dz, dist2);
  };
  const bool use_grid =
      search_ == PairSearch::Grid || (search_ == PairSearch::Auto && n >= kGridThreshold);
  if (use_grid) {
    grid_.build(coords, cutoff);
    grid_.for_each_candidate_pair(check);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) check(i, j);
    }
  }
}

double EnergyModel::value(std::span<const double> coords) {
  const std::size_t n = coords.size() / 3;
  CompensatedSum total;
  for (std::size_t i = 0; i < n; ++i) {
    total.add(wall_term(coords[3 * i], coords[3 * i + 1], coords[3 * i + 2], r_, container_).squared);
  }
  const double two_r = 2.0 * r_;
  visit_overlapping_pairs(coords, [&](std::size_t, std::size_t, double, double, double, double dist2) {
    const double gap = two_r - std::sqrt(dist2);
    total.add(0.5 * gap * gap);  // d_ij^2 + d_ji^2
  });
  return total.value();
}

double EnergyModel::value_and_gradient(std::span<const double> coords, std::span<double> grad) {
  const std::size_t n = coords.size() / 3;
  std::fill(grad.begin(), grad.end(), 0.0);
  CompensatedSum total;
  for (std::size_t i = 0; i < n; ++i) {
    const WallTerm w = wall_term(coords[3 * i], coords[3 * i + 1], coords[3 * i + 2], r_, container_);
    if (w.squared == 0.0) continue;
    total.add(w.squared);
    grad[3 * i] += w.gx;
    grad[3 * i + 1] += w.gy;
    grad[3 * i + 2] += w.gz;
  }
  const double two_r = 2.0 * r_;
  visit_overlapping_pairs(coords, [&](std::size_t i, std::size_t j, double dx, double dy, double dz,
                                      double dist2) {
    const double dist = std::sqrt(dist2);
    const double gap = two_r - dist;
    total.add(0.5 * gap * gap);
    if (dist == 0.0) return;
    const double s = gap / dist;
    grad[3 * i] -= s * dx;
    grad[3 * i + 1] -= s * dy;
    grad[3 * i + 2] -= s * dz;
    grad[3 * j] += s * dx;
    grad[3 * j + 1] += s * dy;
    grad[3 * j + 2] += s * dz;
  });
  return total.value();
}

double EnergyModel::per_sphere(std::span<const double> coords, std::span<double> energies) {
  const std::size_t n = coords.size() / 3;
  CompensatedSum total;
  for (std::size_t i = 0; i < n; ++i) {
    energies[i] = wall_term(coords[3 * i], coords[3 * i + 1], coords[3 * i + 2], r_, container_).squared;
    total.add(energies[i]);
  }
  const double two_r = 2.0 * r_;
  visit_overlapping_pairs(coords, [&](std::size_t i, std::size_t j, double, double, double, double dist2) {
    const double d = 0.5 * (two_r - std::sqrt(dist2));
    energies[i] += d * d;
    energies[j] += d * d;
    total.add(2.0 * d * d);
  });
  return total.value();
}

}  // namespace spherepack
