#pragma once

#include <Eigen/Dense>
#include <string>

namespace bkm {

// Factorizations whose 1-norm condition estimate exceeds this are refused.
inline constexpr double kMaxConditionEstimate = 1e14;

struct DenseSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

// LU with partial pivoting. Construction throws IllConditioned when the
// matrix is singular or its condition estimate exceeds kMaxConditionEstimate.
class DenseLu {
 public:
  explicit DenseLu(const Eigen::MatrixXd& a, std::string label = "matrix");

  Eigen::Index size() const noexcept { return lu_.rows(); }
  double condition_estimate() const noexcept { return condition_; }

  Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
  Eigen::MatrixXd solve(const Eigen::MatrixXd& b) const;
  // Solves A^T X = B.
  Eigen::MatrixXd solve_transposed(const Eigen::MatrixXd& b) const;

 private:
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  double condition_ = 0.0;
};

struct DenseSolution {
  Eigen::VectorXd x;
  double condition_estimate = 0.0;
};

DenseSolution solve_dense(const DenseSystem& system);

// max_i |(A x - b)_i| / max_i |b_i|, or the absolute residual when b = 0.
double relative_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& b);

}  // namespace bkm
