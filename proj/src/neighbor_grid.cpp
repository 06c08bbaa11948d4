#include "spherepack/neighbor_grid.hpp"

#include <cmath>

namespace spherepack {

void CellGrid::build(std::span<const double> coords, double cell_size) {
  const std::size_t n = coords.size() / 3;
  const double inv = 1.0 / cell_size;
  cell_of_.resize(n);
  entries_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Cell c{static_cast<std::int64_t>(std::floor(coords[3 * i] * inv)),
                 static_cast<std::int64_t>(std::floor(coords[3 * i + 1] * inv)),
                 static_cast<std::int64_t>(std::floor(coords[3 * i + 2] * inv))};
    cell_of_[i] = c;
    entries_[i] = {c, i};
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    if (a.cell != b.cell) return a.cell < b.cell;
    return a.index < b.index;
  });
}

}  // namespace spherepack
