#include "bkm/drm.hpp"

#include "bkm/errors.hpp"

namespace bkm {

InterpolationMatrix::InterpolationMatrix(std::vector<Point> centers, KernelPair kernel)
    : centers_(std::move(centers)), kernel_(std::move(kernel)) {
  const auto n = static_cast<Eigen::Index>(centers_.size());
  entries_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    entries_(i, i) = kernel_.phi(0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = kernel_.phi(radial_distance(centers_[i], centers_[j]));
      entries_(i, j) = v;
      entries_(j, i) = v;
    }
  }
}

const DenseLu& InterpolationMatrix::factorize() {
  if (!lu_) lu_.emplace(entries_, "DRM interpolation matrix");
  return *lu_;
}

const DenseLu& InterpolationMatrix::lu() const {
  if (!lu_) throw InvalidArgument("interpolation matrix has not been factorized");
  return *lu_;
}

InterpolationMatrix build_interpolation_matrix(const KnotSet& knots, const KernelPair& kernel) {
  if (kernel.dim != knots.dim()) {
    throw InvalidArgument("kernel dimension does not match knot dimension");
  }
  return InterpolationMatrix(knots.positions(), kernel);
}

DrmFit fit_particular(const KnotSet& knots, const KernelPair& kernel, const Eigen::VectorXd& rhs) {
  auto matrix = build_interpolation_matrix(knots, kernel);
  return fit_particular(matrix, rhs);
}

DrmFit fit_particular(InterpolationMatrix& matrix, const Eigen::VectorXd& rhs) {
  if (rhs.size() != matrix.size()) {
    throw InvalidArgument("fit_particular: rhs length must equal the number of knots");
  }
  const DenseLu& lu = matrix.factorize();
  DrmFit fit;
  fit.alpha = lu.solve(rhs);
  fit.kernel = matrix.kernel();
  fit.centers = matrix.centers();
  fit.condition_estimate = lu.condition_estimate();
  fit.residual = relative_residual(matrix.entries(), fit.alpha, rhs);
  return fit;
}

double evaluate_particular(const DrmFit& fit, const Point& x) {
  double u = 0.0;
  for (std::size_t j = 0; j < fit.centers.size(); ++j) {
    u += fit.alpha[static_cast<Eigen::Index>(j)] *
         fit.kernel.phi_hat(radial_distance(x, fit.centers[j]));
  }
  return u;
}

double evaluate_particular_normal(const DrmFit& fit, const Point& x, const Point& n) {
  double du = 0.0;
  for (std::size_t j = 0; j < fit.centers.size(); ++j) {
    const double r = radial_distance(x, fit.centers[j]);
    du += fit.alpha[static_cast<Eigen::Index>(j)] *
          fit.kernel.phi_hat_normal(r, normal_projection(x, fit.centers[j], n));
  }
  return du;
}

Eigen::MatrixXd apply_operator_coupling(InterpolationMatrix& matrix,
                                        const Eigen::MatrixXd& rho_applied_basis) {
  if (rho_applied_basis.rows() != matrix.size() || rho_applied_basis.cols() != matrix.size()) {
    throw InvalidArgument("apply_operator_coupling: basis image must match the matrix size");
  }
  const DenseLu& lu = matrix.factorize();
  // B A^{-1} = (A^{-T} B^T)^T
  return lu.solve_transposed(rho_applied_basis.transpose()).transpose();
}

}  // namespace bkm
