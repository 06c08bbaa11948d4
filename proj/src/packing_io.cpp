#include "spherepack/packing_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace spherepack {

namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool parse_real(std::string_view text, double& out) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next non-blank line, or throws if the input ends.
  std::string next(const char* expecting) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return line;
    }
    fail(std::string("unexpected end of file, expecting ") + expecting);
  }

  bool at_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return false;
    }
    return true;
  }

  std::string value_of(const std::string& key) {
    const std::string line = next(key.c_str());
    const std::string prefix = key + "=";
    if (line.rfind(prefix, 0) != 0) fail("expected '" + prefix + "...'");
    return line.substr(prefix.size());
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_no_, what); }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

}  // namespace

void write_packing(std::ostream& out, std::span<const Point3> centers, ContainerKind kind, double r0) {
  out << "n=" << centers.size() << '\n'
      << "kind=" << to_string(kind) << '\n'
      << "r0=" << format_real(r0) << '\n'
      << "r=0.5\n";
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const auto& c = centers[i];
    out << i + 1 << ' ' << format_real(c.x) << ' ' << format_real(c.y) << ' ' << format_real(c.z)
        << '\n';
  }
}

void save_packing(const SolveOutcome& outcome, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_packing(out, outcome.dense_packing.centers(), outcome.kind, outcome.r0_min);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

PackingFile parse_packing(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  PackingFile file;

  std::size_t n = 0;
  {
    const std::string text = reader.value_of("n");
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc{} || ptr != text.data() + text.size() || n == 0) reader.fail("bad sphere count");
  }
  try {
    file.kind = parse_container_kind(reader.value_of("kind"));
  } catch (const ParameterError& e) {
    reader.fail(e.what());
  }
  if (!parse_real(reader.value_of("r0"), file.r0) || !(file.r0 > 0.0)) reader.fail("bad container radius");
  if (!parse_real(reader.value_of("r"), file.r) || file.r != kStandardRadius) {
    reader.fail("sphere radius must be 0.5");
  }

  file.centers.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::istringstream row(reader.next("a center row"));
    std::string index, x, y, z, extra;
    row >> index >> x >> y >> z;
    if (z.empty() || (row >> extra)) reader.fail("expected '<i> <x> <y> <z>'");
    if (index != std::to_string(i)) reader.fail("expected sphere index " + std::to_string(i));
    Point3 c;
    if (!parse_real(x, c.x) || !parse_real(y, c.y) || !parse_real(z, c.z)) reader.fail("bad coordinate");
    file.centers.push_back(c);
  }
  if (!reader.at_end()) reader.fail("more center rows than n = " + std::to_string(n));
  return file;
}

PackingFile load_packing(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_packing(in, path.string());
}

RunReport make_report(const RunParameters& params, const SolveOutcome& outcome) {
  RunReport report;
  report.n = params.n;
  report.kind = params.kind;
  report.seed = params.seed;
  report.r0_estimate = outcome.metadata.r0_estimate;
  report.scan_limit = params.scan_limit;
  report.epsilon = params.epsilon;
  report.settings = params.settings;
  report.scan_best_energies = outcome.metadata.scan_best_energies;
  report.scan_count = outcome.metadata.scan_count;
  report.a0_calls = outcome.metadata.a0_calls;
  report.search_iterations = outcome.search_iterations;
  report.ratio = outcome.ratio;
  report.r0_min = outcome.r0_min;
  report.wall_seconds = outcome.metadata.wall_seconds;
  report.centers.assign(outcome.dense_packing.centers().begin(), outcome.dense_packing.centers().end());
  return report;
}

RunParameters replay_parameters(const RunReport& report) {
  RunParameters params;
  params.n = report.n;
  params.kind = report.kind;
  params.seed = report.seed;
  params.r0_estimate = report.r0_estimate;
  params.scan_limit = report.scan_limit;
  params.epsilon = report.epsilon;
  params.settings = report.settings;
  return params;
}

std::string report_to_json(const RunReport& report) {
  using nlohmann::json;
  const auto& s = report.settings;
  json centers = json::array();
  for (const auto& c : report.centers) centers.push_back({c.x, c.y, c.z});
  const json doc = {
      {"instance", {{"n", report.n}, {"kind", to_string(report.kind)}}},
      {"seed", report.seed},
      {"r0_estimate", report.r0_estimate},
      {"scan_limit", report.scan_limit},
      {"epsilon", report.epsilon},
      {"settings",
       {{"success_threshold", s.success_threshold},
        {"max_iterations", s.max_iterations},
        {"stall_gradient_norm", s.stall_gradient_norm},
        {"stall_relative_decrease", s.stall_relative_decrease},
        {"stall_window", s.stall_window},
        {"initial_step", s.initial_step},
        {"step_shrink", s.step_shrink},
        {"step_grow", s.step_grow},
        {"method", to_string(s.method)},
        {"lbfgs_memory", s.lbfgs_memory}}},
      {"scan_best_energies", report.scan_best_energies},
      {"scan_count", report.scan_count},
      {"a0_calls", report.a0_calls},
      {"search_iterations", report.search_iterations},
      {"outcome", {{"ratio", report.ratio}, {"r0_min", report.r0_min}}},
      {"timing", {{"wall_seconds", report.wall_seconds}}},
      {"centers", centers},
  };
  return doc.dump(2);
}

RunReport report_from_json(const std::string& text, const std::string& source) {
  using nlohmann::json;
  try {
    const json doc = json::parse(text);
    RunReport report;
    report.n = doc.at("instance").at("n").get<std::size_t>();
    report.kind = parse_container_kind(doc.at("instance").at("kind").get<std::string>());
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.r0_estimate = doc.at("r0_estimate").get<double>();
    report.scan_limit = doc.at("scan_limit").get<std::size_t>();
    report.epsilon = doc.at("epsilon").get<double>();
    const json& s = doc.at("settings");
    report.settings.success_threshold = s.at("success_threshold").get<double>();
    report.settings.max_iterations = s.at("max_iterations").get<std::size_t>();
    report.settings.stall_gradient_norm = s.at("stall_gradient_norm").get<double>();
    report.settings.stall_relative_decrease = s.at("stall_relative_decrease").get<double>();
    report.settings.stall_window = s.at("stall_window").get<std::size_t>();
    report.settings.initial_step = s.at("initial_step").get<double>();
    report.settings.step_shrink = s.at("step_shrink").get<double>();
    report.settings.step_grow = s.at("step_grow").get<double>();
    const auto method = s.at("method").get<std::string>();
    if (method == "lbfgs") {
      report.settings.method = DescentMethod::Lbfgs;
    } else if (method == "steepest-descent") {
      report.settings.method = DescentMethod::SteepestDescent;
    } else {
      throw ParameterError("unknown descent method '" + method + "'");
    }
    report.settings.lbfgs_memory = s.at("lbfgs_memory").get<std::size_t>();
    report.scan_best_energies = doc.at("scan_best_energies").get<std::vector<double>>();
    report.scan_count = doc.at("scan_count").get<std::size_t>();
    report.a0_calls = doc.at("a0_calls").get<std::size_t>();
    report.search_iterations = doc.at("search_iterations").get<std::size_t>();
    report.ratio = doc.at("outcome").at("ratio").get<double>();
    report.r0_min = doc.at("outcome").at("r0_min").get<double>();
    report.wall_seconds = doc.at("timing").at("wall_seconds").get<double>();
    for (const auto& c : doc.at("centers")) {
      report.centers.push_back({c.at(0).get<double>(), c.at(1).get<double>(), c.at(2).get<double>()});
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError(source, 0, e.what());
  } catch (const ParameterError& e) {
    throw ParseError(source, 0, e.what());
  }
}

void save_report(const RunReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << report_to_json(report) << '\n';
}

RunReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return report_from_json(buffer.str(), path.string());
}

}  // namespace spherepack
