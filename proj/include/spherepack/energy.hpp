#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spherepack/geometry.hpp"
#include "spherepack/neighbor_grid.hpp"

namespace spherepack {

struct EnergyReport {
  double total = 0.0;               // U
  std::vector<double> per_sphere;   // u_i
  double max_container_deformation = 0.0;
  double max_pair_deformation = 0.0;
};

// Overlap depth of a sphere with the container wall. For a cube this is the
// Euclidean norm of the per-axis overflows, so its square is their sum of squares.
double container_deformation(const Point3& center, double r, const Container& container);

// Half the mutual overlap depth of two spheres of radius r.
double pair_deformation(const Point3& a, const Point3& b, double r);

// u_i: squared wall deformation plus squared deformation from every other sphere.
double sphere_energy(std::size_t i, const Configuration& config, const Container& container);

// U = sum of u_i. Each overlapping pair contributes twice (d_ij^2 and d_ji^2).
EnergyReport total_energy(const Configuration& config, const Container& container);

// dU/d(x_i, y_i, z_i) in flat layout. Kinks (zero deformation, coincident
// centers, a center at the origin) contribute zero.
std::vector<double> energy_gradient(const Configuration& config, const Container& container);

enum class PairSearch { Auto, AllPairs, Grid };

// Energy evaluator over flat coordinates with reusable scratch space.
// Auto picks the cell grid for larger n.
class EnergyModel {
 public:
  static constexpr std::size_t kGridThreshold = 48;

  EnergyModel(const Container& container, double r, PairSearch search = PairSearch::Auto);

  double value(std::span<const double> coords);
  double value_and_gradient(std::span<const double> coords, std::span<double> grad);
  // Fills u_i and returns U.
  double per_sphere(std::span<const double> coords, std::span<double> energies);

  const Container& container() const { return container_; }
  double radius() const { return r_; }

 private:
  template <class PairVisitor>
  void visit_overlapping_pairs(std::span<const double> coords, PairVisitor&& visit);

  Container container_;
  double r_;
  PairSearch search_;
  CellGrid grid_;
};

// Running sum with Neumaier compensation.
class CompensatedSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      correction_ += (sum_ - t) + term;
    } else {
      correction_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace spherepack
