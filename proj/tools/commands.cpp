#include "commands.hpp"

#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "spherepack/records.hpp"
#include "spherepack/verification.hpp"

namespace spherepack::cli {

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string signed_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.*f", decimals, v);
  return buf;
}

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<double> record_delta(std::size_t n, ContainerKind kind, double ratio) {
  try {
    return compare_to_record(bundled_records(), n, kind, ratio);
  } catch (const NotInTable&) {
    return std::nullopt;
  }
}

RunParameters run_parameters(std::size_t n, ContainerKind kind, std::optional<double> r0,
                             std::uint64_t seed, std::size_t scan_limit, double epsilon,
                             std::size_t workers) {
  RunParameters params;
  params.n = n;
  params.kind = kind;
  params.r0_estimate = r0.value_or(0.0);
  params.seed = seed;
  params.scan_limit = scan_limit;
  params.epsilon = epsilon;
  params.workers = workers;
  return params;
}

}  // namespace

SolveResult cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  SolveResult result;
  if (options.n == 0 || options.runs == 0) {
    err << "solve: --n and --runs must be at least 1\n";
    result.exit_code = kExitUsage;
    return result;
  }

  std::optional<RunParameters> best_params;
  double total_seconds = 0.0;
  for (std::size_t run = 0; run < options.runs; ++run) {
    const RunParameters params = run_parameters(options.n, options.kind, options.r0, options.seed + run,
                                                 options.scan_limit, options.epsilon, options.workers);
    try {
      SolveOutcome outcome = solve_instance(params);
      total_seconds += outcome.metadata.wall_seconds;
      out << "# run " << run + 1 << " seed " << params.seed << " ratio " << fixed(outcome.ratio, 8)
          << " r0_min " << full(outcome.r0_min) << " scans " << outcome.metadata.scan_count
          << " a0_calls " << outcome.metadata.a0_calls << " packed_in_search "
          << (outcome.metadata.packed_during_search ? "yes" : "no") << std::endl;
      if (!result.best || outcome.ratio > result.best->ratio) {
        result.best = std::move(outcome);
        best_params = params;
      }
    } catch (const UpperBoundInfeasible& e) {
      err << "solve: run " << run + 1 << " (seed " << params.seed << "): " << e.what() << '\n';
    }
  }
  if (!result.best) {
    err << "solve: no run produced a packing; try a larger --r0\n";
    result.exit_code = kExitFailure;
    return result;
  }

  const SolveOutcome& best = *result.best;
  const auto delta = record_delta(options.n, options.kind, best.ratio);
  out << "n kind ratio r0_min delta\n"
      << options.n << ' ' << to_string(options.kind) << ' ' << fixed(best.ratio, 8) << ' '
      << full(best.r0_min) << ' ' << (delta ? signed_fixed(*delta, 8) : std::string("n/a")) << '\n';
  out << "# timing total_seconds " << fixed(total_seconds, 3) << '\n';

  result.report = make_report(*best_params, best);
  if (options.out_path) {
    save_packing(best, *options.out_path);
    save_report(*result.report, *options.out_path + ".json");
  }
  result.exit_code = kExitOk;
  return result;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  PackingFile file;
  try {
    file = load_packing(path);
  } catch (const ParseError& e) {
    err << "verify: " << e.what() << '\n';
    return kExitUsage;
  }
  const Certificate cert = verify_exact(file.centers, file.r0, file.kind);
  out << "n " << file.centers.size() << " kind " << to_string(file.kind) << " r0 " << full(file.r0)
      << '\n'
      << "wall_margin " << full(cert.worst_wall_margin) << '\n'
      << "pair_margin " << full(cert.worst_pair_margin) << '\n';
  for (const auto& v : cert.violations) {
    out << "violation " << to_string(v.kind);
    for (std::size_t i : v.indices) out << ' ' << i + 1;
    out << " magnitude " << full(v.magnitude) << '\n';
  }
  out << (cert.valid ? "valid" : "invalid") << '\n';
  return cert.valid ? kExitOk : kExitFailure;
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err,
              std::vector<BenchRow>* rows_out) {
  if (options.n_min == 0 || options.n_min > options.n_max || options.runs == 0) {
    err << "bench: need 1 <= n-min <= n-max and runs >= 1\n";
    return kExitUsage;
  }
  std::vector<BenchRow> rows;
  out << "n best_ratio record delta mean_seconds\n";
  for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
    BenchRow row;
    row.n = n;
    row.record = bundled_records().find(n, options.kind);
    double seconds = 0.0;
    std::size_t finished = 0;
    for (std::size_t run = 0; run < options.runs; ++run) {
      const auto params = run_parameters(n, options.kind, std::nullopt, options.seed + run,
                                         options.scan_limit, options.epsilon, options.workers);
      try {
        const SolveOutcome outcome = solve_instance(params);
        seconds += outcome.metadata.wall_seconds;
        ++finished;
        if (!row.best_ratio || outcome.ratio > *row.best_ratio) row.best_ratio = outcome.ratio;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
    if (row.best_ratio) {
      row.error.clear();
      row.mean_seconds = seconds / static_cast<double>(finished);
      if (row.record) row.delta = *row.best_ratio - *row.record;
    }
    out << n << ' ' << (row.best_ratio ? fixed(*row.best_ratio, 8) : "failed") << ' '
        << (row.record ? fixed(*row.record, 8) : "n/a") << ' '
        << (row.delta ? signed_fixed(*row.delta, 8) : "n/a") << ' ' << fixed(row.mean_seconds, 3);
    if (!row.error.empty()) out << " # " << row.error;
    out << '\n';
    rows.push_back(std::move(row));
  }

  if (options.csv_path) {
    std::ofstream csv(*options.csv_path);
    if (!csv) {
      err << "bench: cannot write " << *options.csv_path << '\n';
      return kExitFailure;
    }
    csv << "kind,n,best_ratio,record,delta,mean_seconds,error\n";
    for (const auto& row : rows) {
      csv << to_string(options.kind) << ',' << row.n << ','
          << (row.best_ratio ? fixed(*row.best_ratio, 8) : "") << ','
          << (row.record ? fixed(*row.record, 8) : "") << ','
          << (row.delta ? signed_fixed(*row.delta, 8) : "") << ',' << fixed(row.mean_seconds, 3) << ','
          << (row.error.empty() ? "" : "\"" + row.error + "\"") << '\n';
    }
  }
  if (rows_out) *rows_out = std::move(rows);
  return kExitOk;
}

int cmd_plotdata(const std::string& packing_path, const std::string& out_path,
                 const std::string& format, std::ostream& err) {
  if (format != "csv" && format != "json") {
    err << "plotdata: unknown format '" << format << "' (expected csv or json)\n";
    return kExitUsage;
  }
  PackingFile file;
  try {
    file = load_packing(packing_path);
  } catch (const ParseError& e) {
    err << "plotdata: " << e.what() << '\n';
    return kExitUsage;
  }
  std::ofstream out(out_path);
  if (!out) {
    err << "plotdata: cannot write " << out_path << '\n';
    return kExitFailure;
  }
  if (format == "csv") {
    out << "i,x,y,z,radius,kind,r0\n";
    for (std::size_t i = 0; i < file.centers.size(); ++i) {
      const auto& c = file.centers[i];
      out << i + 1 << ',' << full(c.x) << ',' << full(c.y) << ',' << full(c.z) << ',' << full(file.r)
          << ',' << to_string(file.kind) << ',' << full(file.r0) << '\n';
    }
  } else {
    nlohmann::json centers = nlohmann::json::array();
    for (const auto& c : file.centers) centers.push_back({c.x, c.y, c.z});
    const nlohmann::json doc = {{"kind", to_string(file.kind)},
                                {"r0", file.r0},
                                {"r", file.r},
                                {"centers", centers}};
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace spherepack::cli
