#include "bkm/frm.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "bkm/errors.hpp"

namespace bkm {

namespace {

using SparseMatrix = Eigen::SparseMatrix<double>;

SparseMatrix to_eigen(const SparseSystem& s) {
  const auto n = static_cast<Eigen::Index>(s.rows());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(s.nonzeros());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t p = s.row_offsets[i]; p < s.row_offsets[i + 1]; ++p) {
      triplets.emplace_back(static_cast<Eigen::Index>(i),
                            static_cast<Eigen::Index>(s.col_indices[p]), s.values[p]);
    }
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

// Hager's estimate of ||A^{-1}||_1 from solves with A and A^T.
template <typename Solver>
double inverse_norm1_estimate(Solver& lu, Eigen::Index n) {
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  double estimate = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    const Eigen::VectorXd y = lu.solve(x);
    estimate = y.lpNorm<1>();
    const Eigen::VectorXd sign = y.unaryExpr([](double v) { return v >= 0.0 ? 1.0 : -1.0; });
    const Eigen::VectorXd z = lu.transpose().solve(sign);
    Eigen::Index j = 0;
    const double zmax = z.cwiseAbs().maxCoeff(&j);
    if (iter > 0 && zmax <= z.dot(x)) break;
    x.setZero();
    x[j] = 1.0;
  }
  return estimate;
}

}  // namespace

Eigen::MatrixXd SparseSystem::to_dense() const {
  const auto n = static_cast<Eigen::Index>(rows());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t p = row_offsets[i]; p < row_offsets[i + 1]; ++p) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col_indices[p])) = values[p];
    }
  }
  return m;
}

std::vector<std::size_t> nearest_neighbors(std::span<const Point> positions, std::size_t i,
                                           std::size_t k) {
  std::vector<std::size_t> order(positions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> dist(positions.size());
  for (std::size_t j = 0; j < positions.size(); ++j) {
    dist[j] = radial_distance(positions[i], positions[j]);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
  order.resize(std::min(k, order.size()));
  return order;
}

SparseSystem truncate_system(const DenseSystem& dense, std::span<const Point> positions,
                             std::size_t k, bool symmetrize) {
  const auto n = static_cast<std::size_t>(dense.matrix.rows());
  if (k == 0) throw InvalidArgument("truncate_system: k must be at least 1");
  if (dense.matrix.cols() != dense.matrix.rows() || positions.size() != n ||
      static_cast<std::size_t>(dense.rhs.size()) != n) {
    throw InvalidArgument("truncate_system: square system with one knot per row required");
  }
  if (k > n) throw InvalidArgument("truncate_system: k exceeds the number of knots");

  std::vector<std::vector<std::size_t>> pattern(n);
  for (std::size_t i = 0; i < n; ++i) pattern[i] = nearest_neighbors(positions, i, k);
  if (symmetrize) {
    auto rows = pattern;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : pattern[i]) rows[j].push_back(i);
    }
    pattern = std::move(rows);
  }

  SparseSystem out;
  out.k = k;
  out.rhs = dense.rhs;
  out.row_offsets.reserve(n + 1);
  out.row_offsets.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& cols = pattern[i];
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (std::size_t j : cols) {
      out.col_indices.push_back(j);
      out.values.push_back(dense.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
    out.row_offsets.push_back(out.values.size());
  }
  return out;
}

SparseSystem truncate_system(const DenseSystem& dense, const KnotSet& knots, std::size_t k,
                             bool symmetrize) {
  const auto positions = knots.positions();
  return truncate_system(dense, positions, k, symmetrize);
}

SparseSolution solve_sparse(const SparseSystem& system) {
  const auto n = static_cast<Eigen::Index>(system.rows());
  if (n == 0 || system.rhs.size() != n) {
    throw InvalidArgument("solve_sparse: empty system or rhs size mismatch");
  }
  const SparseMatrix a = to_eigen(system);
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(a);
  lu.factorize(a);
  if (lu.info() != Eigen::Success) {
    throw IllConditioned("truncated system is singular: " + lu.lastErrorMessage(),
                         std::numeric_limits<double>::infinity());
  }
  double norm1 = 0.0;
  for (Eigen::Index j = 0; j < a.outerSize(); ++j) {
    double col = 0.0;
    for (SparseMatrix::InnerIterator it(a, j); it; ++it) col += std::abs(it.value());
    norm1 = std::max(norm1, col);
  }
  const double condition = norm1 * inverse_norm1_estimate(lu, n);
  if (!std::isfinite(condition) || condition > kMaxConditionEstimate) {
    std::ostringstream msg;
    msg << "truncated system is ill-conditioned (1-norm condition estimate " << condition
        << ", limit " << kMaxConditionEstimate << ")";
    throw IllConditioned(msg.str(), condition);
  }
  SparseSolution out;
  out.x = lu.solve(system.rhs);
  out.condition_estimate = condition;
  const Eigen::VectorXd r = a * out.x - system.rhs;
  const double bmax = system.rhs.cwiseAbs().maxCoeff();
  out.residual = r.cwiseAbs().maxCoeff() / (bmax > 0.0 ? bmax : 1.0);
  return out;
}

}  // namespace bkm
