#include "spherepack/records.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace spherepack {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    fields.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) return fields;
    start = pos + 1;
  }
}

template <class T>
bool parse_number(std::string_view text, T& out) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

bool RecordTable::insert(std::size_t n, ContainerKind kind, double ratio) {
  return entries_.emplace(Key{kind, n}, ratio).second;
}

std::optional<double> RecordTable::find(std::size_t n, ContainerKind kind) const {
  const auto it = entries_.find({kind, n});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

double RecordTable::at(std::size_t n, ContainerKind kind) const {
  if (auto value = find(n, kind)) return *value;
  throw NotInTable("no record for n = " + std::to_string(n) + " in a " +
                   std::string(to_string(kind)));
}

std::optional<double> RecordTable::estimate_ratio(std::size_t n, ContainerKind kind) const {
  if (auto exact = find(n, kind)) return exact;
  const auto above = entries_.lower_bound({kind, n});
  const bool has_above = above != entries_.end() && above->first.first == kind;
  const bool has_below = above != entries_.begin() && std::prev(above)->first.first == kind;
  auto scaled = [n](const std::pair<const Key, double>& e) {
    return e.second * std::cbrt(static_cast<double>(e.first.second) / static_cast<double>(n));
  };
  if (has_above && has_below) {
    const auto& lo = *std::prev(above);
    const auto& hi = *above;
    const double t = static_cast<double>(n - lo.first.second) /
                     static_cast<double>(hi.first.second - lo.first.second);
    return lo.second + t * (hi.second - lo.second);
  }
  if (has_below) return scaled(*std::prev(above));
  if (has_above) return scaled(*above);
  return std::nullopt;
}

RecordTable parse_records(std::string_view text, const std::string& source) {
  RecordTable table;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#' || line == "kind,n,ratio") continue;

    const auto fields = split(line, ',');
    if (fields.size() != 3) throw ParseError(source, line_no, "expected kind,n,ratio");
    ContainerKind kind;
    try {
      kind = parse_container_kind(fields[0]);
    } catch (const ParameterError& e) {
      throw ParseError(source, line_no, e.what());
    }
    std::size_t n = 0;
    double ratio = 0.0;
    if (!parse_number(fields[1], n) || n == 0) throw ParseError(source, line_no, "bad sphere count");
    if (!parse_number(fields[2], ratio) || !(ratio > 0.0) || !(ratio <= 1.0)) {
      throw ParseError(source, line_no, "bad ratio");
    }
    if (!table.insert(n, kind, ratio)) {
      throw ParseError(source, line_no,
                       "duplicate entry for " + std::string(to_string(kind)) + " n = " + std::to_string(n));
    }
  }
  return table;
}

RecordTable load_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_records(buffer.str(), path.string());
}

const RecordTable& bundled_records() {
  static const RecordTable table = parse_records(bundled_records_text(), "data/records.csv");
  return table;
}

double default_r0_estimate(std::size_t n, ContainerKind kind, const RecordTable& table,
                           double inflation) {
  if (n == 0) throw ParameterError("sphere count must be at least 1");
  if (!(inflation > 0.0)) throw ParameterError("inflation must be positive");
  if (auto ratio = table.estimate_ratio(n, kind)) return kStandardRadius / *ratio * inflation;
  // No data at all: assume a packing fraction of 0.5 and a wall layer.
  const double fraction = kind == ContainerKind::Sphere ? 1.0 : 3.14159265358979323846 / 6.0;
  return kStandardRadius * (std::cbrt(static_cast<double>(n) / 0.5 * fraction) + 1.0) * inflation;
}

}  // namespace spherepack
