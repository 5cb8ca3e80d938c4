#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "bkm/geometry.hpp"
#include "bkm/linalg.hpp"

namespace bkm {

// Row-compressed square system produced by truncating a dense collocation
// matrix to each row's k nearest knots.
struct SparseSystem {
  std::vector<double> values;
  std::vector<std::size_t> col_indices;
  std::vector<std::size_t> row_offsets;  // size rows() + 1
  Eigen::VectorXd rhs;
  std::size_t k = 0;

  std::size_t rows() const noexcept { return row_offsets.empty() ? 0 : row_offsets.size() - 1; }
  std::size_t nonzeros() const noexcept { return values.size(); }
  std::size_t row_nonzeros(std::size_t i) const { return row_offsets[i + 1] - row_offsets[i]; }
  Eigen::MatrixXd to_dense() const;
};

// Indices of the k knots nearest to positions[i] (itself included), sorted
// by distance with ties going to the lower index.
std::vector<std::size_t> nearest_neighbors(std::span<const Point> positions, std::size_t i,
                                           std::size_t k);

// Keeps, in row i, exactly the entries of the k nearest knots; everything
// else is dropped without any decay weighting. With symmetrize the pattern
// is the union of (i, j) and (j, i), so rows may exceed k entries.
SparseSystem truncate_system(const DenseSystem& dense, std::span<const Point> positions,
                             std::size_t k, bool symmetrize = false);
SparseSystem truncate_system(const DenseSystem& dense, const KnotSet& knots, std::size_t k,
                             bool symmetrize = false);

struct SparseSolution {
  Eigen::VectorXd x;
  double condition_estimate = 0.0;
  double residual = 0.0;  // relative, see relative_residual
};

// Sparse LU with partial pivoting. Throws IllConditioned on singular systems
// or when the condition estimate exceeds kMaxConditionEstimate.
SparseSolution solve_sparse(const SparseSystem& system);

}  // namespace bkm
