#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "bkm/drm.hpp"
#include "bkm/geometry.hpp"
#include "bkm/kernels.hpp"

namespace bkm {

using ScalarField = std::function<double(const Point&)>;

// Remaining operator rho in  (lap + 1) u = f + rho{u}.
struct ZeroRemainder {};

// Linear rho, given by its action on the DRM basis: basis_image(x, center, kernel)
// is rho applied to phi(|. - center|), evaluated at x.
struct LinearRemainder {
  std::function<double(const Point& at, const Point& center, const KernelPair& kernel)>
      basis_image;
};

// Nonlinear rho that only ever gets evaluated at boundary knots, where u is
// known from Dirichlet data: rho{u}(x) = g(u(x), x).
struct BoundaryNonlinearRemainder {
  std::function<double(double u, const Point& x)> g;
};

using Remainder = std::variant<ZeroRemainder, LinearRemainder, BoundaryNonlinearRemainder>;

struct ProblemSpec {
  int dimension = 2;
  std::optional<Ellipse> geometry;
  ScalarField forcing;
  Remainder remainder = ZeroRemainder{};
  ScalarField dirichlet;  // required when any knot is Dirichlet
  ScalarField neumann;    // required when any knot is Neumann
  ScalarField exact;      // optional
};

struct SolveOptions {
  // Truncate both the DRM and the homogeneous system to the k nearest knots.
  std::optional<std::size_t> frm_k;
};

struct SolveDiagnostics {
  double drm_condition = 0.0;
  double bkm_condition = 0.0;
  int factorizations = 0;
  double drm_residual = 0.0;
  double collocation_residual = 0.0;
};

struct BkmSolution {
  Eigen::VectorXd lambda;
  DrmFit drm_fit;
  std::vector<Point> sources;  // boundary knots carrying lambda
  GeneralSolution general_solution{2};
  Eigen::VectorXd interior_u;  // u at interior knots, boundary-then-interior order
  SolveDiagnostics diagnostics;
};

// Rows: boundary knots (Dirichlet rows g(r), Neumann rows dg/dn), then
// interior knots (g(r)). Columns: the boundary knots as sources.
Eigen::MatrixXd assemble_homogeneous_rows(const KnotSet& knots, const GeneralSolution& gs);

// Particular solution first, homogeneous correction second. A linear remainder
// with Neumann or interior knots couples both steps into one system in
// (lambda, unknown nodal u).
BkmSolution solve_linear(const ProblemSpec& problem, const KnotSet& knots,
                         const KernelPair& kernel, const SolveOptions& options = {});

// One linear solve for a nonlinear equation: rho is evaluated on the
// Dirichlet data at the boundary knots. Requires Dirichlet-only boundary
// knots and no interior knots.
BkmSolution solve_nonlinear_boundary_only(const ProblemSpec& problem, const KnotSet& knots,
                                          const KernelPair& kernel,
                                          const SolveOptions& options = {});

// u = v + u_p
double evaluate(const BkmSolution& solution, const Point& x);
// v alone
double evaluate_homogeneous(const BkmSolution& solution, const Point& x);

}  // namespace bkm
