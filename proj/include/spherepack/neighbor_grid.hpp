#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spherepack {

// Uniform cell list over flat xyz coordinates. With cell size equal to the
// interaction cutoff, every pair closer than the cutoff lies in the same or
// an adjacent cell.
class CellGrid {
 public:
  void build(std::span<const double> coords, double cell_size);

  // Calls visit(i, j) once for every unordered pair i < j sharing a cell
  // neighborhood. Visiting order is deterministic: ascending i, then cell
  // offset, then j's position in the sorted cell list.
  template <class Visitor>
  void for_each_candidate_pair(Visitor&& visit) const {
    for (std::size_t i = 0; i < cell_of_.size(); ++i) {
      const Cell home = cell_of_[i];
      for (const auto& offset : kOffsets) {
        const Cell probe{home.x + offset[0], home.y + offset[1], home.z + offset[2]};
        auto first = std::lower_bound(entries_.begin(), entries_.end(), probe,
                                      [](const Entry& e, const Cell& c) { return e.cell < c; });
        for (auto it = first; it != entries_.end() && it->cell == probe; ++it) {
          if (it->index > i) visit(i, it->index);
        }
      }
    }
  }

  std::size_t size() const { return cell_of_.size(); }

 private:
  struct Cell {
    std::int64_t x, y, z;
    auto operator<=>(const Cell&) const = default;
  };
  struct Entry {
    Cell cell;
    std::size_t index;
  };

  static constexpr auto kOffsets = [] {
    std::array<std::array<std::int64_t, 3>, 27> out{};
    std::size_t k = 0;
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz) out[k++] = {dx, dy, dz};
    return out;
  }();

  std::vector<Cell> cell_of_;
  std::vector<Entry> entries_;  // sorted by cell, then index
};

}  // namespace spherepack
