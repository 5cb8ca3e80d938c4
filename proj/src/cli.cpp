#include "bkm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bkm/bench.hpp"

namespace bkm::cli {

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("BKM_LOG");
  if (env == nullptr) return LogLevel::info;
  const std::string v(env);
  if (v == "quiet") return LogLevel::quiet;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::info;
}

void log_report(std::ostream& err, LogLevel level, const ErrorReport& r) {
  if (level == LogLevel::quiet) return;
  err << "[bkm] " << r.label << " knots=" << r.knots << " c=" << format_number(r.shape);
  if (r.frm_k) err << " frm=" << *r.frm_k;
  if (!r.ok()) {
    err << " error: " << *r.error << '\n';
    return;
  }
  err << " max_abs=" << format_number(r.max_abs) << " rms=" << format_number(r.rms) << '\n';
  if (level == LogLevel::debug) {
    const auto& d = r.diagnostics;
    err << "[bkm]   cond(DRM)=" << format_number(d.drm_condition)
        << " cond(BKM)=" << format_number(d.bkm_condition)
        << " factorizations=" << d.factorizations
        << " drm_residual=" << format_number(d.drm_residual)
        << " collocation_residual=" << format_number(d.collocation_residual) << '\n';
  }
}

std::string fixed(double v, int decimals) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

// Side-by-side layout: x, y, Exact, then one BKM(N) column per report.
void write_table(std::ostream& out, const std::vector<ErrorReport>& reports, bool with_exact) {
  constexpr std::size_t w = 12;
  out << pad("x", w) << pad("y", w);
  if (with_exact) out << pad("Exact", w);
  for (const auto& r : reports) out << pad("BKM(" + std::to_string(r.knots) + ")", w);
  out << '\n';
  const std::size_t rows = reports.empty() ? 0 : reports.front().rows.size();
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& first = reports.front().rows[i];
    out << pad(fixed(first.x, 2), w) << pad(fixed(first.y, 2), w);
    if (with_exact) out << pad(fixed(first.exact, 4), w);
    for (const auto& r : reports) out << pad(r.ok() ? fixed(r.rows[i].computed, 4) : "-", w);
    out << '\n';
  }
  if (with_exact) {
    out << pad("RMS", 3 * w);
    for (const auto& r : reports) out << pad(r.ok() ? format_number(r.rms) : "failed", w);
    out << '\n';
  }
}

void write_block_header(std::ostream& out, const ErrorReport& r) {
  out << "# " << r.label << " knots=" << r.knots << " c=" << format_number(r.shape);
  if (r.frm_k) out << " frm=" << *r.frm_k;
  if (r.ok()) {
    out << " max_abs=" << format_number(r.max_abs) << " rms=" << format_number(r.rms) << '\n';
  } else {
    out << " error=" << *r.error << '\n';
  }
}

BenchmarkCase named_case(const std::string& name) {
  return name == "table1" ? table1_case() : table2_case();
}

int run_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto bc = named_case(cfg.target);
  const std::size_t n = cfg.knots.empty() ? bc.default_knots.back() : cfg.knots.front();
  const auto report = run_case(bc, n, cfg.shape.value_or(bc.default_shape), cfg.frm_k);
  log_report(err, log_level(), report);
  if (!report.ok()) {
    err << "bkm: solver failed: " << *report.error << '\n';
    return kSolverError;
  }
  if (cfg.format == OutputFormat::csv) {
    write_csv(out, report);
  } else {
    write_table(out, {report}, true);
  }
  return kOk;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto bc = named_case(cfg.target);
  const auto counts = cfg.knots.empty() ? bc.default_knots : cfg.knots;
  if (!std::is_sorted(counts.begin(), counts.end())) {
    err << "bkm: --knots must be ascending for sweep\n";
    return kBadArguments;
  }
  const auto reports = convergence_sweep(bc, counts, cfg.shape.value_or(bc.default_shape), cfg.frm_k);
  bool failed = false;
  for (const auto& r : reports) {
    log_report(err, log_level(), r);
    failed = failed || !r.ok();
  }
  if (cfg.format == OutputFormat::csv) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) out << '\n';
      write_block_header(out, reports[i]);
      if (reports[i].ok()) write_csv(out, reports[i]);
    }
  } else {
    write_table(out, reports, true);
  }
  return failed ? kSolverError : kOk;
}

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.target);
  if (!in) {
    err << "bkm: cannot open problem file '" << cfg.target << "'\n";
    return kBadArguments;
  }
  ProblemFile file;
  try {
    file = parse_problem_file(in);
  } catch (const ProblemFileError& e) {
    err << "bkm: " << cfg.target << ": " << e.what() << '\n';
    return kBadArguments;
  }
  const ProblemSpec problem = to_problem(file);
  ErrorReport report;
  report.label = cfg.target;
  report.knots = file.knots;
  report.shape = file.shape;
  report.frm_k = file.frm_k;
  try {
    const auto sol = solve_on_ellipse(problem, *file.ellipse, file.knots, file.shape, file.frm_k);
    report.diagnostics = sol.diagnostics;
    double sum_sq = 0.0;
    for (const auto& p : file.eval) {
      ReportRow row{p.x(), p.y(), std::nan(""), evaluate(sol, p), std::nan(""), std::nan("")};
      if (problem.exact) {
        row.exact = problem.exact(p);
        row.abs_err = std::abs(row.computed - row.exact);
        row.rel_err = row.exact != 0.0 ? row.abs_err / std::abs(row.exact) : std::nan("");
        report.max_abs = std::max(report.max_abs, row.abs_err);
        sum_sq += row.abs_err * row.abs_err;
      }
      report.rows.push_back(row);
    }
    if (!report.rows.empty()) report.rms = std::sqrt(sum_sq / static_cast<double>(report.rows.size()));
  } catch (const std::runtime_error& e) {
    err << "bkm: solver failed: " << e.what() << '\n';
    return kSolverError;
  }
  log_report(err, log_level(), report);

  const bool with_exact = static_cast<bool>(problem.exact);
  if (cfg.format == OutputFormat::table) {
    write_table(out, {report}, with_exact);
  } else if (with_exact) {
    write_csv(out, report);
  } else {
    out << "x,y,computed\n";
    for (const auto& r : report.rows) {
      out << format_number(r.x) << ',' << format_number(r.y) << ',' << format_number(r.computed)
          << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary knot method: benchmarks, sweeps and ellipse problem solves", "bkm"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  std::size_t bench_knots = 0;
  double shape = 0.0;
  std::size_t frm = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write results to this file instead of stdout");
    sub->add_option("--format", format, "csv or table")->check(CLI::IsMember({"csv", "table"}));
  };
  auto add_case_options = [&](CLI::App* sub) {
    sub->add_option("case", cfg.target, "table1 or table2")
        ->required()
        ->check(CLI::IsMember({"table1", "table2"}));
    sub->add_option("--c", shape, "Multiquadric shape parameter")->check(CLI::PositiveNumber);
    sub->add_option("--frm", frm, "Truncate systems to the K nearest knots")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    add_common(sub);
  };

  auto* bench = app.add_subcommand("bench", "Run a reference case and report errors");
  add_case_options(bench);
  bench->add_option("--knots", bench_knots, "Number of boundary knots")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));

  auto* sweep = app.add_subcommand("sweep", "Run a reference case for several knot counts");
  add_case_options(sweep);
  sweep->add_option("--knots", cfg.knots, "Ascending knot counts, e.g. 5,7")
      ->delimiter(',')
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));

  auto* solve = app.add_subcommand("solve", "Solve a problem described by a key-value file");
  solve->add_option("problem", cfg.target, "Problem file")->required();
  add_common(solve);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "bkm: " << e.what() << "\n\n" << app.help();
    return kBadArguments;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "table" ? OutputFormat::table : OutputFormat::csv;
  if (bench->parsed() && bench->count("--knots") > 0) cfg.knots = {bench_knots};
  if (cfg.subcommand != "solve") {
    const auto* sub = app.get_subcommands().front();
    if (sub->count("--c") > 0) cfg.shape = shape;
    if (sub->count("--frm") > 0) cfg.frm_k = frm;
  }

  std::ofstream file;
  std::ostream* dest = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "bkm: cannot write '" << cfg.out_path << "'\n";
      return kBadArguments;
    }
    dest = &file;
  }

  try {
    if (cfg.subcommand == "bench") return run_bench(cfg, *dest, err);
    if (cfg.subcommand == "sweep") return run_sweep(cfg, *dest, err);
    return run_solve(cfg, *dest, err);
  } catch (const InvalidArgument& e) {
    err << "bkm: " << e.what() << '\n';
    return kBadArguments;
  }
}

}  // namespace bkm::cli
