#include "bkm/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bkm/errors.hpp"

namespace bkm {

DenseLu::DenseLu(const Eigen::MatrixXd& a, std::string label) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InvalidArgument(label + ": expected a non-empty square matrix");
  }
  if (!a.allFinite()) throw InvalidArgument(label + ": matrix has non-finite entries");
  lu_.compute(a);
  // An exact zero pivot can slip past the rcond estimate.
  const bool zero_pivot = (lu_.matrixLU().diagonal().array() == 0.0).any();
  const double rcond = zero_pivot ? 0.0 : lu_.rcond();
  condition_ = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!std::isfinite(condition_) || condition_ > kMaxConditionEstimate) {
    std::ostringstream msg;
    msg << label << " is ill-conditioned (1-norm condition estimate " << condition_
        << ", limit " << kMaxConditionEstimate << ")";
    throw IllConditioned(msg.str(), condition_);
  }
}

Eigen::VectorXd DenseLu::solve(const Eigen::VectorXd& b) const { return lu_.solve(b); }

Eigen::MatrixXd DenseLu::solve(const Eigen::MatrixXd& b) const { return lu_.solve(b); }

Eigen::MatrixXd DenseLu::solve_transposed(const Eigen::MatrixXd& b) const {
  return lu_.transpose().solve(b);
}

DenseSolution solve_dense(const DenseSystem& system) {
  if (system.rhs.size() != system.matrix.rows()) {
    throw InvalidArgument("solve_dense: rhs size does not match matrix");
  }
  DenseLu lu(system.matrix, "dense system");
  return {lu.solve(system.rhs), lu.condition_estimate()};
}

double relative_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& b) {
  const double bmax = b.size() ? b.cwiseAbs().maxCoeff() : 0.0;
  const double scale = bmax > 0.0 ? bmax : 1.0;
  const Eigen::VectorXd r = a * x - b;
  return r.size() ? r.cwiseAbs().maxCoeff() / scale : 0.0;
}

}  // namespace bkm
