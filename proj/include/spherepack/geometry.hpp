#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "spherepack/error.hpp"

namespace spherepack {

// Radius of the spheres whose packing is reported.
inline constexpr double kStandardRadius = 0.5;
// Radius inflation used while solving; U < 1e-16 at the inflated radius
// implies an exact packing at kStandardRadius.
inline constexpr double kFakeInflation = 1e-8;
inline constexpr double kFakeRadius = kStandardRadius + kFakeInflation;

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

  Point3 operator-() const { return {-x, -y, -z}; }
  friend Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(double s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

inline double distance(const Point3& a, const Point3& b) { return (a - b).norm(); }

enum class ContainerKind { Sphere, Cube };

std::string_view to_string(ContainerKind kind);
// Accepts "sphere" and "cube"; throws ParameterError otherwise.
ContainerKind parse_container_kind(std::string_view text);

// Centered at the origin. For a cube, r0 is half the edge length.
class Container {
 public:
  Container(ContainerKind kind, double r0);

  static Container sphere(double r0) { return {ContainerKind::Sphere, r0}; }
  static Container cube(double r0) { return {ContainerKind::Cube, r0}; }

  ContainerKind kind() const { return kind_; }
  double r0() const { return r0_; }

 private:
  ContainerKind kind_;
  double r0_;
};

// Ordered sphere centers sharing one radius. Index i names the same sphere
// across every operation.
class Configuration {
 public:
  Configuration(std::vector<Point3> centers, double radius);

  std::size_t size() const { return centers_.size(); }
  double radius() const { return radius_; }
  std::span<const Point3> centers() const { return centers_; }
  const Point3& operator[](std::size_t i) const { return centers_[i]; }

  // Same centers, different radius.
  Configuration with_radius(double radius) const { return {centers_, radius}; }

  // Flat x0,y0,z0,x1,... layout used by the solvers.
  std::vector<double> flat() const;
  static Configuration from_flat(std::span<const double> coords, double radius);

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Point3> centers_;
  double radius_;
};

// Sorted, duplicate-free set of 0-based sphere indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices);
  explicit IndexSet(std::vector<std::size_t> indices);

  static IndexSet all(std::size_t n);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t i) const;
  std::span<const std::size_t> indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  // Throws ParameterError unless every index is < n.
  void check_bounds(std::size_t n) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

// n centers drawn uniformly from the container shrunk inward by r, so every
// sphere starts inside the wall. Deterministic in `seed`.
Configuration random_configuration(std::size_t n, const Container& container, double r,
                                   std::uint64_t seed);

// Point-reflects every center listed in `subset` through the container center.
Configuration invert_subset(const IndexSet& subset, const Configuration& config);

// [0, n) minus `subset`.
IndexSet complement(const IndexSet& subset, std::size_t n);

}  // namespace spherepack
