#include "bkm/bench.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bkm/errors.hpp"
#include "bkm/kernels.hpp"

namespace bkm {

namespace {

constexpr double kExactResidualTolerance = 1e-10;

void verify_exact(const BenchmarkCase& c) {
  for (const auto& p : c.points) {
    const double r = c.governing_residual(p.at);
    if (!(std::abs(r) <= kExactResidualTolerance)) {
      throw std::logic_error(c.label + ": exact solution violates the governing equation");
    }
  }
}

}  // namespace

BenchmarkCase table1_case() {
  auto exact = [](const Point& p) { return std::sin(p.x()) + p.x(); };
  ProblemSpec problem;
  problem.dimension = 2;
  problem.geometry = Ellipse(Point(0.0, 0.0), 2.0, 1.0);
  problem.forcing = [](const Point& p) { return p.x(); };
  problem.dirichlet = exact;
  problem.exact = exact;

  BenchmarkCase c{
      "table1",
      problem,
      *problem.geometry,
      {},
      {5, 7},
      3.0,
      [exact](const Point& p) { return -std::sin(p.x()) + exact(p) - p.x(); },
  };
  const double rows[][3] = {{1.5, 0.0, 2.50}, {1.2, -0.35, 2.13}, {0.6, -0.45, 1.16},
                            {0.0, 0.0, 0.0},  {0.9, 0.0, 1.68},   {0.3, 0.0, 0.60}};
  for (const auto& r : rows) {
    const Point at(r[0], r[1]);
    c.points.push_back({at, exact(at), r[2]});
  }
  verify_exact(c);
  return c;
}

BenchmarkCase table2_case() {
  auto exact = [](const Point& p) { return p.y() * std::exp(p.x()); };
  auto forcing = [](const Point& p) {
    const double e = std::exp(p.x());
    return p.y() * e + p.y() * p.y() * e * e;
  };
  ProblemSpec problem;
  problem.dimension = 2;
  problem.geometry = Ellipse(Point(3.0, 0.0), 1.5, 0.5);
  problem.forcing = forcing;
  // lap u + u = f + (u - u^2)
  problem.remainder = BoundaryNonlinearRemainder{[](double u, const Point&) { return u - u * u; }};
  problem.dirichlet = exact;
  problem.exact = exact;

  BenchmarkCase c{
      "table2",
      problem,
      *problem.geometry,
      {},
      {7, 9},
      18.0,
      [exact, forcing](const Point& p) {
        const double u = exact(p);
        return u + u * u - forcing(p);  // lap(y e^x) = y e^x
      },
  };
  const double rows[][3] = {{4.5, 0.0, 0.0},     {4.2, -0.35, -23.34}, {3.6, -0.45, -16.47},
                            {3.0, -0.45, -9.04}, {2.4, -0.45, -4.96},  {1.8, -0.35, -2.12},
                            {3.0, 0.5, 10.04},   {3.0, -0.5, -10.04}};
  for (const auto& r : rows) {
    const Point at(r[0], r[1]);
    c.points.push_back({at, exact(at), r[2]});
  }
  verify_exact(c);
  return c;
}

BkmSolution solve_on_ellipse(const ProblemSpec& problem, const Ellipse& geometry, std::size_t n,
                             double shape, std::optional<std::size_t> frm_k) {
  const KnotSet knots = ellipse_knots(geometry, n);
  const KernelPair kernel = mq_pair(shape, problem.dimension);
  const SolveOptions options{frm_k};
  if (std::holds_alternative<BoundaryNonlinearRemainder>(problem.remainder)) {
    return solve_nonlinear_boundary_only(problem, knots, kernel, options);
  }
  return solve_linear(problem, knots, kernel, options);
}

ErrorReport run_case(const BenchmarkCase& bench_case, std::size_t n_knots, double shape,
                     std::optional<std::size_t> frm_k) {
  ErrorReport report;
  report.label = bench_case.label;
  report.knots = n_knots;
  report.shape = shape;
  report.frm_k = frm_k;

  std::optional<BkmSolution> solution;
  try {
    solution = solve_on_ellipse(bench_case.problem, bench_case.geometry, n_knots, shape, frm_k);
  } catch (const IllConditioned& e) {
    report.error = e.what();
    return report;
  } catch (const Unsupported& e) {
    report.error = e.what();
    return report;
  } catch (const DegenerateGeometry& e) {
    report.error = e.what();
    return report;
  }
  report.diagnostics = solution->diagnostics;

  double sum_sq = 0.0;
  for (const auto& p : bench_case.points) {
    ReportRow row{};
    row.x = p.at.x();
    row.y = p.at.y();
    row.exact = p.exact;
    row.computed = evaluate(*solution, p.at);
    row.abs_err = std::abs(row.computed - row.exact);
    row.rel_err = row.exact != 0.0 ? row.abs_err / std::abs(row.exact)
                                   : std::numeric_limits<double>::quiet_NaN();
    report.max_abs = std::max(report.max_abs, row.abs_err);
    if (row.exact != 0.0) report.max_rel = std::max(report.max_rel, row.rel_err);
    sum_sq += row.abs_err * row.abs_err;
    report.rows.push_back(row);
  }
  if (!report.rows.empty()) report.rms = std::sqrt(sum_sq / static_cast<double>(report.rows.size()));
  return report;
}

std::vector<ErrorReport> convergence_sweep(const BenchmarkCase& bench_case,
                                           const std::vector<std::size_t>& knot_counts,
                                           double shape, std::optional<std::size_t> frm_k) {
  for (std::size_t i = 1; i < knot_counts.size(); ++i) {
    if (knot_counts[i] < knot_counts[i - 1]) {
      throw InvalidArgument("convergence_sweep: knot counts must be ascending");
    }
  }
  std::vector<ErrorReport> reports;
  reports.reserve(knot_counts.size());
  for (std::size_t n : knot_counts) reports.push_back(run_case(bench_case, n, shape, frm_k));
  return reports;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 10);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const ErrorReport& report) {
  out << "x,y,exact,computed,abs_err,rel_err\n";
  for (const auto& r : report.rows) {
    out << format_number(r.x) << ',' << format_number(r.y) << ',' << format_number(r.exact) << ','
        << format_number(r.computed) << ',' << format_number(r.abs_err) << ','
        << format_number(r.rel_err) << '\n';
  }
}

}  // namespace bkm
