#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bkm/geometry.hpp"
#include "bkm/solver.hpp"

namespace bkm {

struct TestPoint {
  Point at;
  double exact;
  double published_exact;  // as printed in the reference table, 2 decimals
};

struct BenchmarkCase {
  std::string label;
  ProblemSpec problem;
  Ellipse geometry;
  std::vector<TestPoint> points;
  std::vector<std::size_t> default_knots;
  double default_shape = 0.0;
  // lap u + (terms) - forcing for the exact solution, evaluated analytically.
  std::function<double(const Point&)> governing_residual;
};

// lap u + u = x on the ellipse a=2, b=1 with u = sin x + x on the boundary.
BenchmarkCase table1_case();
// lap u + u^2 = y e^x + y^2 e^2x with u = y e^x on the ellipse centred at
// (3, 0), a=1.5, b=0.5.
BenchmarkCase table2_case();

struct ReportRow {
  double x;
  double y;
  double exact;
  double computed;
  double abs_err;
  double rel_err;  // NaN when exact == 0
};

struct ErrorReport {
  std::string label;
  std::size_t knots = 0;
  double shape = 0.0;
  std::optional<std::size_t> frm_k;
  std::vector<ReportRow> rows;
  double max_abs = 0.0;
  double rms = 0.0;
  double max_rel = 0.0;  // over rows with nonzero exact value
  SolveDiagnostics diagnostics;
  std::optional<std::string> error;  // solver failure, rows empty

  bool ok() const noexcept { return !error.has_value(); }
};

// Places n knots on the geometry and dispatches on the remainder kind.
BkmSolution solve_on_ellipse(const ProblemSpec& problem, const Ellipse& geometry, std::size_t n,
                             double shape, std::optional<std::size_t> frm_k = {});

ErrorReport run_case(const BenchmarkCase& bench_case, std::size_t n_knots, double shape,
                     std::optional<std::size_t> frm_k = {});

std::vector<ErrorReport> convergence_sweep(const BenchmarkCase& bench_case,
                                           const std::vector<std::size_t>& knot_counts,
                                           double shape, std::optional<std::size_t> frm_k = {});

// Locale-independent, 10 significant digits (the %.10g layout).
std::string format_number(double v);

// Header x,y,exact,computed,abs_err,rel_err followed by one line per row.
void write_csv(std::ostream& out, const ErrorReport& report);

}  // namespace bkm
