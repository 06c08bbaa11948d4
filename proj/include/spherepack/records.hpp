#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "spherepack/geometry.hpp"

namespace spherepack {

// Reference r/r0 ratios keyed by (kind, n).
class RecordTable {
 public:
  using Key = std::pair<ContainerKind, std::size_t>;

  // Returns false (and leaves the table unchanged) if the key already exists.
  bool insert(std::size_t n, ContainerKind kind, double ratio);

  std::optional<double> find(std::size_t n, ContainerKind kind) const;
  // Throws NotInTable.
  double at(std::size_t n, ContainerKind kind) const;

  // Tabulated value, else linear interpolation between the nearest listed
  // neighbors, else n^(-1/3) scaling from the nearest end. Never used for
  // acceptance, only to seed container radii.
  std::optional<double> estimate_ratio(std::size_t n, ContainerKind kind) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Key, double>& entries() const { return entries_; }

 private:
  std::map<Key, double> entries_;
};

// CSV with lines `kind,n,ratio`. Blank lines, `#` comments and a
// `kind,n,ratio` header are skipped. Throws ParseError with the line number
// on malformed rows and duplicate keys.
RecordTable parse_records(std::string_view text, const std::string& source = "<records>");
RecordTable load_records(const std::filesystem::path& path);

// The table compiled in from data/records.csv.
const RecordTable& bundled_records();
std::string_view bundled_records_text();

// Container radius to search at: 0.5 / estimated ratio, times `inflation`.
double default_r0_estimate(std::size_t n, ContainerKind kind,
                           const RecordTable& table = bundled_records(), double inflation = 1.0);

}  // namespace spherepack
