#include "spherepack/geometry.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace spherepack {

namespace {

// Portable [−1, 1) sample; std distributions are implementation-defined.
double symmetric_unit(std::mt19937_64& engine) {
  const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

}  // namespace

std::string_view to_string(ContainerKind kind) {
  return kind == ContainerKind::Sphere ? "sphere" : "cube";
}

ContainerKind parse_container_kind(std::string_view text) {
  if (text == "sphere") return ContainerKind::Sphere;
  if (text == "cube") return ContainerKind::Cube;
  throw ParameterError("unknown container kind '" + std::string(text) + "'");
}

Container::Container(ContainerKind kind, double r0) : kind_(kind), r0_(r0) {
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw ParameterError("container radius must be positive and finite");
  }
}

Configuration::Configuration(std::vector<Point3> centers, double radius)
    : centers_(std::move(centers)), radius_(radius) {
  if (centers_.empty()) throw ParameterError("configuration needs at least one sphere");
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    throw ParameterError("sphere radius must be positive and finite");
  }
  for (const auto& c : centers_) {
    if (!c.finite()) throw ParameterError("sphere center is not finite");
  }
}

std::vector<double> Configuration::flat() const {
  std::vector<double> coords;
  coords.reserve(3 * centers_.size());
  for (const auto& c : centers_) {
    coords.push_back(c.x);
    coords.push_back(c.y);
    coords.push_back(c.z);
  }
  return coords;
}

Configuration Configuration::from_flat(std::span<const double> coords, double radius) {
  if (coords.size() % 3 != 0) throw ParameterError("flat coordinate count is not a multiple of 3");
  std::vector<Point3> centers(coords.size() / 3);
  for (std::size_t i = 0; i < centers.size(); ++i) {
    centers[i] = {coords[3 * i], coords[3 * i + 1], coords[3 * i + 2]};
  }
  return {std::move(centers), radius};
}

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw ParameterError("index set contains duplicates");
  }
}

IndexSet IndexSet::all(std::size_t n) {
  IndexSet set;
  set.indices_.resize(n);
  for (std::size_t i = 0; i < n; ++i) set.indices_[i] = i;
  return set;
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

void IndexSet::check_bounds(std::size_t n) const {
  if (!indices_.empty() && indices_.back() >= n) {
    throw ParameterError("sphere index " + std::to_string(indices_.back()) +
                         " out of range for n = " + std::to_string(n));
  }
}

Configuration random_configuration(std::size_t n, const Container& container, double r,
                                   std::uint64_t seed) {
  if (n == 0) throw ParameterError("sphere count must be at least 1");
  if (!(r > 0.0) || !std::isfinite(r)) throw ParameterError("sphere radius must be positive");

  const double reach = std::max(container.r0() - r, 0.0);
  std::mt19937_64 engine(seed);
  std::vector<Point3> centers(n);
  for (auto& c : centers) {
    if (container.kind() == ContainerKind::Cube) {
      c = {reach * symmetric_unit(engine), reach * symmetric_unit(engine),
           reach * symmetric_unit(engine)};
      continue;
    }
    // Rejection from the bounding cube of the unit ball.
    Point3 p;
    do {
      p = {symmetric_unit(engine), symmetric_unit(engine), symmetric_unit(engine)};
    } while (p.x * p.x + p.y * p.y + p.z * p.z > 1.0);
    c = reach * p;
  }
  return {std::move(centers), r};
}

Configuration invert_subset(const IndexSet& subset, const Configuration& config) {
  subset.check_bounds(config.size());
  std::vector<Point3> centers(config.centers().begin(), config.centers().end());
  for (std::size_t i : subset) centers[i] = -centers[i];
  return {std::move(centers), config.radius()};
}

IndexSet complement(const IndexSet& subset, std::size_t n) {
  subset.check_bounds(n);
  std::vector<std::size_t> rest;
  rest.reserve(n - subset.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!subset.contains(i)) rest.push_back(i);
  }
  return IndexSet(std::move(rest));
}

}  // namespace spherepack
