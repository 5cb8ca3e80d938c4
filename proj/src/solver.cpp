#include "bkm/solver.hpp"

#include <algorithm>
#include <string>

#include "bkm/errors.hpp"
#include "bkm/frm.hpp"
#include "bkm/linalg.hpp"

namespace bkm {

namespace {

void validate(const ProblemSpec& problem, const KnotSet& knots, const KernelPair& kernel) {
  if (problem.dimension != 2 && problem.dimension != 3) {
    throw InvalidArgument("problem dimension must be 2 or 3");
  }
  if (knots.dim() != problem.dimension || kernel.dim != problem.dimension) {
    throw InvalidArgument("problem, knots and kernel dimensions differ");
  }
  if (!problem.forcing) throw InvalidArgument("problem has no forcing function");
  if (knots.num_dirichlet() > 0 && !problem.dirichlet) {
    throw InvalidArgument("Dirichlet knots present but no Dirichlet data");
  }
  if (knots.num_neumann() > 0 && !problem.neumann) {
    throw InvalidArgument("Neumann knots present but no Neumann data");
  }
}

Eigen::VectorXd forcing_at_knots(const ProblemSpec& problem, const KnotSet& knots) {
  Eigen::VectorXd f(static_cast<Eigen::Index>(knots.size()));
  for (std::size_t i = 0; i < knots.size(); ++i) {
    f[static_cast<Eigen::Index>(i)] = problem.forcing(knots.position(i));
  }
  return f;
}

double boundary_data(const ProblemSpec& problem, const BoundaryKnot& k) {
  return k.type == BoundaryType::dirichlet ? problem.dirichlet(k.position)
                                           : problem.neumann(k.position);
}

// Solves a square system densely or, with frm_k, through the truncated
// sparse path. Counts one factorization.
Eigen::VectorXd solve_counted(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& rhs,
                              std::span<const Point> positions,
                              const std::optional<std::size_t>& frm_k, const std::string& label,
                              int& factorizations, double& condition) {
  ++factorizations;
  if (frm_k) {
    const auto sparse = truncate_system({matrix, rhs}, positions, *frm_k);
    auto sol = solve_sparse(sparse);
    condition = sol.condition_estimate;
    return sol.x;
  }
  DenseLu lu(matrix, label);
  condition = lu.condition_estimate();
  return lu.solve(rhs);
}

// Shared pipeline for a right-hand side that does not depend on unknown u.
BkmSolution solve_uncoupled(const ProblemSpec& problem, const KnotSet& knots,
                            const KernelPair& kernel, const Eigen::VectorXd& drm_rhs,
                            const SolveOptions& options) {
  const GeneralSolution gs = helmholtz_general_solution(problem.dimension);
  const std::size_t n = knots.num_boundary();
  BkmSolution sol;
  sol.general_solution = gs;
  sol.sources = knots.boundary_positions();

  auto interp = build_interpolation_matrix(knots, kernel);
  const auto positions = knots.positions();
  DrmFit fit;
  fit.kernel = kernel;
  fit.centers = positions;
  fit.alpha = solve_counted(interp.entries(), drm_rhs, positions, options.frm_k,
                            "DRM interpolation matrix", sol.diagnostics.factorizations,
                            fit.condition_estimate);
  fit.residual = relative_residual(interp.entries(), fit.alpha, drm_rhs);
  sol.diagnostics.drm_condition = fit.condition_estimate;
  sol.diagnostics.drm_residual = fit.residual;

  const Eigen::MatrixXd rows = assemble_homogeneous_rows(knots, gs);
  const Eigen::MatrixXd h = rows.topRows(static_cast<Eigen::Index>(n));
  Eigen::VectorXd b(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& k = knots.boundary()[i];
    const double particular = k.type == BoundaryType::dirichlet
                                  ? evaluate_particular(fit, k.position)
                                  : evaluate_particular_normal(fit, k.position, k.normal);
    b[static_cast<Eigen::Index>(i)] = boundary_data(problem, k) - particular;
  }
  sol.lambda = solve_counted(h, b, sol.sources, options.frm_k, "BKM collocation matrix",
                             sol.diagnostics.factorizations, sol.diagnostics.bkm_condition);
  sol.diagnostics.collocation_residual = relative_residual(h, sol.lambda, b);
  sol.drm_fit = std::move(fit);

  sol.interior_u.resize(static_cast<Eigen::Index>(knots.num_interior()));
  for (std::size_t l = 0; l < knots.num_interior(); ++l) {
    sol.interior_u[static_cast<Eigen::Index>(l)] = evaluate(sol, knots.interior()[l]);
  }
  return sol;
}

// Linear remainder: alpha = A^{-1} (f + C u) with C = B A^{-1}. Nodal u is
// known at Dirichlet knots; elsewhere it joins lambda as an unknown with the
// defining row v(x) + u_p(x) - u = 0.
BkmSolution solve_coupled(const ProblemSpec& problem, const KnotSet& knots,
                          const KernelPair& kernel, const LinearRemainder& rho) {
  if (!rho.basis_image) throw InvalidArgument("linear remainder has no basis image");
  const GeneralSolution gs = helmholtz_general_solution(problem.dimension);
  const std::size_t n = knots.num_boundary();
  const std::size_t m = knots.size();
  const auto mi = static_cast<Eigen::Index>(m);
  const auto ni = static_cast<Eigen::Index>(n);
  const auto positions = knots.positions();

  BkmSolution sol;
  sol.general_solution = gs;
  sol.sources = knots.boundary_positions();

  auto interp = build_interpolation_matrix(knots, kernel);
  const DenseLu& a_lu = interp.factorize();
  ++sol.diagnostics.factorizations;
  sol.diagnostics.drm_condition = a_lu.condition_estimate();

  Eigen::MatrixXd basis(mi, mi);
  for (Eigen::Index i = 0; i < mi; ++i) {
    for (Eigen::Index j = 0; j < mi; ++j) {
      basis(i, j) = rho.basis_image(positions[static_cast<std::size_t>(i)],
                                    positions[static_cast<std::size_t>(j)], kernel);
    }
  }
  const Eigen::MatrixXd coupling = apply_operator_coupling(interp, basis);
  const Eigen::MatrixXd g = a_lu.solve(coupling);  // alpha = alpha0 + g u
  const Eigen::VectorXd f = forcing_at_knots(problem, knots);
  const Eigen::VectorXd alpha0 = a_lu.solve(f);

  std::vector<Eigen::Index> unknown;
  Eigen::VectorXd u_known = Eigen::VectorXd::Zero(mi);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < n && knots.boundary()[i].type == BoundaryType::dirichlet) {
      u_known[static_cast<Eigen::Index>(i)] = problem.dirichlet(positions[i]);
    } else {
      unknown.push_back(static_cast<Eigen::Index>(i));
    }
  }
  const auto nu = static_cast<Eigen::Index>(unknown.size());
  Eigen::MatrixXd g_unknown(mi, nu);
  for (Eigen::Index c = 0; c < nu; ++c) g_unknown.col(c) = g.col(unknown[static_cast<std::size_t>(c)]);
  const Eigen::VectorXd alpha_known = alpha0 + g * u_known;

  // Row vectors mapping alpha to u_p (or du_p/dn) at a knot.
  auto particular_row = [&](std::size_t i, bool normal) {
    Eigen::RowVectorXd row(mi);
    const Point& x = positions[i];
    for (Eigen::Index j = 0; j < mi; ++j) {
      const Point& cj = positions[static_cast<std::size_t>(j)];
      const double r = radial_distance(x, cj);
      row[j] = normal ? kernel.phi_hat_normal(r, normal_projection(x, cj, knots.boundary()[i].normal))
                      : kernel.phi_hat(r);
    }
    return row;
  };

  const Eigen::MatrixXd h = assemble_homogeneous_rows(knots, gs);
  const Eigen::Index size = ni + nu;
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(size, size);
  Eigen::VectorXd rhs(size);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& knot = knots.boundary()[i];
    const auto e = particular_row(i, knot.type == BoundaryType::neumann);
    const auto r = static_cast<Eigen::Index>(i);
    k.row(r).head(ni) = h.row(r);
    k.row(r).tail(nu) = e * g_unknown;
    rhs[r] = boundary_data(problem, knot) - e.dot(alpha_known);
  }
  for (Eigen::Index c = 0; c < nu; ++c) {
    const auto i = unknown[static_cast<std::size_t>(c)];
    const auto e = particular_row(static_cast<std::size_t>(i), false);
    const Eigen::Index r = ni + c;
    k.row(r).head(ni) = h.row(i);
    k.row(r).tail(nu) = e * g_unknown;
    k(r, ni + c) -= 1.0;
    rhs[r] = -e.dot(alpha_known);
  }

  DenseLu k_lu(k, "coupled BKM system");
  ++sol.diagnostics.factorizations;
  sol.diagnostics.bkm_condition = k_lu.condition_estimate();
  const Eigen::VectorXd z = k_lu.solve(rhs);
  sol.diagnostics.collocation_residual = relative_residual(k, z, rhs);
  sol.lambda = z.head(ni);
  const Eigen::VectorXd w = z.tail(nu);

  Eigen::VectorXd u_all = u_known;
  for (Eigen::Index c = 0; c < nu; ++c) u_all[unknown[static_cast<std::size_t>(c)]] = w[c];

  DrmFit& fit = sol.drm_fit;
  fit.kernel = kernel;
  fit.centers = positions;
  fit.alpha = alpha_known + g_unknown * w;
  fit.condition_estimate = a_lu.condition_estimate();
  fit.residual = relative_residual(interp.entries(), fit.alpha, f + coupling * u_all);
  sol.diagnostics.drm_residual = fit.residual;

  sol.interior_u = u_all.tail(static_cast<Eigen::Index>(knots.num_interior()));
  return sol;
}

}  // namespace

Eigen::MatrixXd assemble_homogeneous_rows(const KnotSet& knots, const GeneralSolution& gs) {
  if (knots.dim() != gs.dim()) {
    throw InvalidArgument("general solution dimension does not match knots");
  }
  const std::size_t n = knots.num_boundary();
  const std::size_t m = knots.size();
  Eigen::MatrixXd h(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < m; ++i) {
    const Point& x = knots.position(i);
    const bool neumann = i < n && knots.boundary()[i].type == BoundaryType::neumann;
    for (std::size_t k = 0; k < n; ++k) {
      const Point& src = knots.boundary()[k].position;
      const double r = radial_distance(x, src);
      h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          neumann ? gs.normal_derivative(r, normal_projection(x, src, knots.boundary()[i].normal))
                  : gs.value(r);
    }
  }
  return h;
}

BkmSolution solve_linear(const ProblemSpec& problem, const KnotSet& knots,
                         const KernelPair& kernel, const SolveOptions& options) {
  validate(problem, knots, kernel);
  if (std::holds_alternative<BoundaryNonlinearRemainder>(problem.remainder)) {
    throw InvalidArgument("solve_linear: nonlinear remainder, use solve_nonlinear_boundary_only");
  }
  if (const auto* rho = std::get_if<LinearRemainder>(&problem.remainder)) {
    if (options.frm_k) {
      throw Unsupported("FRM truncation is not available for the coupled linear system");
    }
    return solve_coupled(problem, knots, kernel, *rho);
  }
  return solve_uncoupled(problem, knots, kernel, forcing_at_knots(problem, knots), options);
}

BkmSolution solve_nonlinear_boundary_only(const ProblemSpec& problem, const KnotSet& knots,
                                          const KernelPair& kernel,
                                          const SolveOptions& options) {
  validate(problem, knots, kernel);
  if (knots.num_interior() > 0) {
    throw Unsupported("nonlinear linearisation needs boundary knots only (u unknown inside)");
  }
  if (knots.num_neumann() > 0) {
    throw Unsupported("nonlinear linearisation needs Dirichlet data at every knot");
  }
  const auto* rho = std::get_if<BoundaryNonlinearRemainder>(&problem.remainder);
  Eigen::VectorXd rhs = forcing_at_knots(problem, knots);
  if (rho != nullptr) {
    if (!rho->g) throw InvalidArgument("nonlinear remainder has no function");
    for (std::size_t i = 0; i < knots.num_boundary(); ++i) {
      const Point& x = knots.position(i);
      rhs[static_cast<Eigen::Index>(i)] += rho->g(problem.dirichlet(x), x);
    }
  } else if (!std::holds_alternative<ZeroRemainder>(problem.remainder)) {
    throw InvalidArgument("solve_nonlinear_boundary_only: linear remainder, use solve_linear");
  }
  return solve_uncoupled(problem, knots, kernel, rhs, options);
}

double evaluate_homogeneous(const BkmSolution& solution, const Point& x) {
  double v = 0.0;
  for (std::size_t k = 0; k < solution.sources.size(); ++k) {
    v += solution.lambda[static_cast<Eigen::Index>(k)] *
         solution.general_solution.value(radial_distance(x, solution.sources[k]));
  }
  return v;
}

double evaluate(const BkmSolution& solution, const Point& x) {
  return evaluate_homogeneous(solution, x) + evaluate_particular(solution.drm_fit, x);
}

}  // namespace bkm
