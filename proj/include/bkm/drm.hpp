#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "bkm/geometry.hpp"
#include "bkm/kernels.hpp"
#include "bkm/linalg.hpp"

namespace bkm {

// A[i][j] = phi(|x_i - x_j|) over all knots, boundary first then interior.
class InterpolationMatrix {
 public:
  InterpolationMatrix(std::vector<Point> centers, KernelPair kernel);

  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  const std::vector<Point>& centers() const noexcept { return centers_; }
  const KernelPair& kernel() const noexcept { return kernel_; }
  Eigen::Index size() const noexcept { return entries_.rows(); }

  bool is_factored() const noexcept { return lu_.has_value(); }
  // Factorizes on first call; later calls return the cached factorization.
  const DenseLu& factorize();
  const DenseLu& lu() const;

 private:
  std::vector<Point> centers_;
  KernelPair kernel_;
  Eigen::MatrixXd entries_;
  std::optional<DenseLu> lu_;
};

InterpolationMatrix build_interpolation_matrix(const KnotSet& knots, const KernelPair& kernel);

// Coefficients of the particular-solution expansion u_p = sum_j alpha_j phi_hat(r_j).
struct DrmFit {
  Eigen::VectorXd alpha;
  KernelPair kernel;
  std::vector<Point> centers;
  double condition_estimate = 0.0;
  // Relative interpolation residual at the knots (see relative_residual).
  double residual = 0.0;
};

// rhs holds f + rho{u} already evaluated at every knot.
DrmFit fit_particular(const KnotSet& knots, const KernelPair& kernel, const Eigen::VectorXd& rhs);
DrmFit fit_particular(InterpolationMatrix& matrix, const Eigen::VectorXd& rhs);

double evaluate_particular(const DrmFit& fit, const Point& x);
double evaluate_particular_normal(const DrmFit& fit, const Point& x, const Point& n);

// Given B[i][j] = rho applied to the j-th phi basis function at knot i,
// returns B A^{-1}: the map from nodal u values to the rho contribution of
// the interpolated right-hand side.
Eigen::MatrixXd apply_operator_coupling(InterpolationMatrix& matrix,
                                        const Eigen::MatrixXd& rho_applied_basis);

}  // namespace bkm
