#pragma once

// Test-only reference computations. Kept independent of the library's
// energy code paths (no EnergyModel, no cell grid, no compensated sums).

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "spherepack/geometry.hpp"

namespace oracle {

using spherepack::Configuration;
using spherepack::Container;
using spherepack::ContainerKind;
using spherepack::Point3;

inline double wall_deformation_squared(const Point3& c, double r, const Container& box) {
  if (box.kind() == ContainerKind::Sphere) {
    const double norm = std::sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
    const double d = norm + r > box.r0() ? norm + r - box.r0() : 0.0;
    return d * d;
  }
  double sum = 0.0;
  for (double v : {c.x, c.y, c.z}) {
    const double o = std::abs(v) + r > box.r0() ? std::abs(v) + r - box.r0() : 0.0;
    sum += o * o;
  }
  return sum;
}

inline double pair_deformation(const Point3& a, const Point3& b, double r) {
  const double dist = std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                                (a.z - b.z) * (a.z - b.z));
  return dist < 2 * r ? 0.5 * (2 * r - dist) : 0.0;
}

// u_i by direct summation over j = 0..n, j != i.
inline double sphere_energy(std::size_t i, const Configuration& x, const Container& box) {
  double u = wall_deformation_squared(x[i], x.radius(), box);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != i) u += std::pow(oracle::pair_deformation(x[i], x[j], x.radius()), 2);
  }
  return u;
}

// U as the naive ordered double loop.
inline double total_energy(const Configuration& x, const Container& box) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) total += wall_deformation_squared(x[i], x.radius(), box);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i) total += std::pow(oracle::pair_deformation(x[i], x[j], x.radius()), 2);
    }
  }
  return total;
}

// Central differences of total_energy with step h.
inline std::vector<double> fd_gradient(const Configuration& x, const Container& box, double h) {
  auto coords = x.flat();
  std::vector<double> grad(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const double saved = coords[k];
    coords[k] = saved + h;
    const double up = oracle::total_energy(Configuration::from_flat(coords, x.radius()), box);
    coords[k] = saved - h;
    const double down = oracle::total_energy(Configuration::from_flat(coords, x.radius()), box);
    coords[k] = saved;
    grad[k] = (up - down) / (2 * h);
  }
  return grad;
}

// Smallest distance of any active or inactive term from its kink: pair
// distances from 2r (and from 0), wall measures from r0 - r. Finite
// differences with step h are only meaningful when this exceeds h by a margin.
inline double kink_clearance(const Configuration& x, const Container& box) {
  const double r = x.radius();
  double clearance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Point3& c = x[i];
    if (box.kind() == ContainerKind::Sphere) {
      const double norm = c.norm();
      clearance = std::min({clearance, std::abs(norm + r - box.r0()), norm});
    } else {
      for (double v : {c.x, c.y, c.z}) clearance = std::min({clearance, std::abs(std::abs(v) + r - box.r0()), std::abs(v)});
    }
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double dist = spherepack::distance(x[i], x[j]);
      clearance = std::min({clearance, std::abs(dist - 2 * r), dist});
    }
  }
  return clearance;
}

// Centers uniform in [-extent, extent]^3.
inline Configuration uniform_cube_points(std::size_t n, double extent, double r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-extent, extent);
  std::vector<Point3> centers(n);
  for (auto& c : centers) c = {coord(rng), coord(rng), coord(rng)};
  return {centers, r};
}

// Independent containment/overlap check at radius 0.5.
inline bool naive_valid(const std::vector<Point3>& c, double r0, ContainerKind kind) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (kind == ContainerKind::Sphere) {
      if (std::sqrt(c[i].x * c[i].x + c[i].y * c[i].y + c[i].z * c[i].z) + 0.5 > r0) return false;
    } else {
      for (double v : {c[i].x, c[i].y, c[i].z}) {
        if (std::abs(v) + 0.5 > r0) return false;
      }
    }
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const double dx = c[i].x - c[j].x, dy = c[i].y - c[j].y, dz = c[i].z - c[j].z;
      if (std::sqrt(dx * dx + dy * dy + dz * dz) < 1.0) return false;
    }
  }
  return true;
}

// Chains and small lattices of touching spheres, stretched by a random factor
// within a few 1e-8 of one and jittered, in containers within a few 1e-8 of
// tight. Both fake-sphere verdicts occur often.
inline std::pair<std::vector<Point3>, double> near_threshold(std::mt19937_64& rng, ContainerKind kind) {
  std::uniform_real_distribution<double> stretch(-2e-8, 6e-8);
  std::uniform_real_distribution<double> jitter(-5e-9, 5e-9);
  std::vector<Point3> c;
  double extent = 0.0;  // container radius minus 0.5 for the untouched shape
  switch (rng() % 3) {
    case 0: {  // a line of k spheres along x
      const int k = 2 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) c.push_back({i - (k - 1) / 2.0, 0.0, 0.0});
      extent = (k - 1) / 2.0;
      break;
    }
    case 1: {  // 2x2x2 simple cubic block
      for (int i = 0; i < 8; ++i) c.push_back({(i & 1) ? 0.5 : -0.5, (i & 2) ? 0.5 : -0.5, (i & 4) ? 0.5 : -0.5});
      extent = kind == ContainerKind::Cube ? 0.5 : std::sqrt(0.75);
      break;
    }
    default: {  // regular tetrahedron
      const double s = 1.0 / std::sqrt(8.0);
      c = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
      extent = kind == ContainerKind::Cube ? s : std::sqrt(3.0) * s;
      break;
    }
  }
  const double scale = 1.0 + stretch(rng);
  for (auto& p : c) p = {p.x * scale + jitter(rng), p.y * scale + jitter(rng), p.z * scale + jitter(rng)};
  return {c, extent * scale + 0.5 + stretch(rng)};
}

}  // namespace oracle
