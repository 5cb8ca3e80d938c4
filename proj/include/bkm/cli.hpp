#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bkm/errors.hpp"
#include "bkm/geometry.hpp"
#include "bkm/solver.hpp"

namespace bkm::cli {

enum ExitCode : int { kOk = 0, kSolverError = 1, kBadArguments = 2 };

enum class OutputFormat { csv, table };

struct RunConfig {
  std::string subcommand;  // bench | sweep | solve
  std::string target;      // case name or problem file path
  std::vector<std::size_t> knots;
  std::optional<double> shape;
  std::optional<std::size_t> frm_k;
  std::string out_path;  // empty: standard output
  OutputFormat format = OutputFormat::csv;
};

// Runs the command line (arguments without the program name). Results go to
// out (or --out), diagnostics and usage to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

class ProblemFileError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Key-value problem description for the solve subcommand:
//   dimension = 2
//   ellipse = cx cy a b
//   forcing = <builtin>        dirichlet = <builtin>
//   rho = zero | u_minus_u_squared      (optional)
//   exact = <builtin>          (optional)
//   knots = N                  c = C
//   frm = K                    (optional)
//   eval = x y                 (repeatable)
// Text after '#' is a comment; blank lines are ignored.
struct ProblemFile {
  int dimension = 2;
  std::optional<Ellipse> ellipse;
  std::string forcing;
  std::string dirichlet;
  std::string rho = "zero";
  std::string exact;
  std::size_t knots = 0;
  double shape = 0.0;
  std::optional<std::size_t> frm_k;
  std::vector<Point> eval;
};

ProblemFile parse_problem_file(std::istream& in);

// Named fields: zero, x, sin_x_plus_x, y_exp_x, y_exp_x_plus_y2_exp_2x.
ScalarField builtin_function(const std::string& name);

ProblemSpec to_problem(const ProblemFile& file);

}  // namespace bkm::cli
