#include <cmath>
#include <locale>
#include <map>
#include <sstream>
#include <string>

#include "bkm/cli.hpp"

namespace bkm::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> numbers(const std::string& value, std::size_t expected, int line) {
  std::istringstream in(value);
  in.imbue(std::locale::classic());
  std::vector<double> out;
  double v = 0.0;
  while (in >> v) out.push_back(v);
  if (!in.eof() || out.size() != expected) {
    throw ProblemFileError("line " + std::to_string(line) + ": expected " +
                           std::to_string(expected) + " number(s), got '" + value + "'");
  }
  for (double x : out) {
    if (!std::isfinite(x)) throw ProblemFileError("line " + std::to_string(line) + ": not finite");
  }
  return out;
}

std::size_t count(const std::string& value, int line) {
  const double v = numbers(value, 1, line)[0];
  if (v < 1.0 || v != std::floor(v)) {
    throw ProblemFileError("line " + std::to_string(line) + ": expected a positive integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

ScalarField builtin_function(const std::string& name) {
  static const std::map<std::string, ScalarField> builtins = {
      {"zero", [](const Point&) { return 0.0; }},
      {"x", [](const Point& p) { return p.x(); }},
      {"sin_x_plus_x", [](const Point& p) { return std::sin(p.x()) + p.x(); }},
      {"y_exp_x", [](const Point& p) { return p.y() * std::exp(p.x()); }},
      {"y_exp_x_plus_y2_exp_2x",
       [](const Point& p) {
         const double u = p.y() * std::exp(p.x());
         return u + u * u;
       }},
  };
  const auto it = builtins.find(name);
  if (it == builtins.end()) throw ProblemFileError("unknown builtin function '" + name + "'");
  return it->second;
}

ProblemFile parse_problem_file(std::istream& in) {
  ProblemFile file;
  bool have_knots = false;
  bool have_shape = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ProblemFileError("line " + std::to_string(line) + ": expected 'key = value'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "dimension") {
      file.dimension = static_cast<int>(count(value, line));
    } else if (key == "ellipse") {
      const auto v = numbers(value, 4, line);
      try {
        file.ellipse.emplace(Point(v[0], v[1]), v[2], v[3]);
      } catch (const InvalidArgument& e) {
        throw ProblemFileError("line " + std::to_string(line) + ": " + e.what());
      }
    } else if (key == "forcing") {
      builtin_function(value);
      file.forcing = value;
    } else if (key == "dirichlet") {
      builtin_function(value);
      file.dirichlet = value;
    } else if (key == "exact") {
      builtin_function(value);
      file.exact = value;
    } else if (key == "rho") {
      if (value != "zero" && value != "u_minus_u_squared") {
        throw ProblemFileError("line " + std::to_string(line) + ": unknown rho '" + value + "'");
      }
      file.rho = value;
    } else if (key == "knots") {
      file.knots = count(value, line);
      have_knots = true;
    } else if (key == "c") {
      file.shape = numbers(value, 1, line)[0];
      if (!(file.shape > 0.0)) throw ProblemFileError("line " + std::to_string(line) + ": c must be > 0");
      have_shape = true;
    } else if (key == "frm") {
      file.frm_k = count(value, line);
    } else if (key == "eval") {
      const auto v = numbers(value, 2, line);
      file.eval.emplace_back(v[0], v[1]);
    } else {
      throw ProblemFileError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  if (file.dimension != 2) throw ProblemFileError("only dimension = 2 (ellipse) problems are supported");
  if (!file.ellipse) throw ProblemFileError("missing key 'ellipse'");
  if (file.forcing.empty()) throw ProblemFileError("missing key 'forcing'");
  if (file.dirichlet.empty()) throw ProblemFileError("missing key 'dirichlet'");
  if (!have_knots) throw ProblemFileError("missing key 'knots'");
  if (!have_shape) throw ProblemFileError("missing key 'c'");
  return file;
}

ProblemSpec to_problem(const ProblemFile& file) {
  ProblemSpec p;
  p.dimension = file.dimension;
  p.geometry = file.ellipse;
  p.forcing = builtin_function(file.forcing);
  p.dirichlet = builtin_function(file.dirichlet);
  if (!file.exact.empty()) p.exact = builtin_function(file.exact);
  if (file.rho == "u_minus_u_squared") {
    p.remainder = BoundaryNonlinearRemainder{[](double u, const Point&) { return u - u * u; }};
  }
  return p;
}

}  // namespace bkm::cli
