#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace otd {

// Columns are the components a_i in R^d.
using ComponentSet = Eigen::MatrixXd;

/// Dense symmetric third-order tensor over R^d.
/// Entries are stored row-major over (i,j,k): linear index i*d^2 + j*d + k.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(Eigen::Index d) : d_(d), data_(static_cast<size_t>(d) * d * d, 0.0) {}

  Eigen::Index dim() const { return d_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(data_.size()); }

  double& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return data_[static_cast<size_t>((i * d_ + j) * d_ + k)];
  }
  double operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return data_[static_cast<size_t>((i * d_ + j) * d_ + k)];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  /// View as the d^2 x d matrix with rows (i,j) and column k. For a
  /// symmetric tensor every two-vs-one flattening equals this matrix.
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
  flatten_12_3() const {
    return {data_.data(), d_ * d_, d_};
  }

  /// View as the d x d^2 matrix with row i and columns (j,k).
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
  flatten_1_23() const {
    return {data_.data(), d_, d_ * d_};
  }

  Eigen::Map<const Eigen::VectorXd> as_vector() const {
    return {data_.data(), size()};
  }

 private:
  Eigen::Index d_ = 0;
  std::vector<double> data_;
};

/// Row/column mode grouping of a tensor flattening. Mode labels are 1-based;
/// within a group the first listed mode is the most significant digit.
struct FlatteningSpec {
  std::vector<int> row_modes;
  std::vector<int> col_modes;

  FlatteningSpec(std::vector<int> rows, std::vector<int> cols);

  int order() const { return static_cast<int>(row_modes.size() + col_modes.size()); }

  /// (row, col) of a multi-index (0-based entries, one per mode 1..order).
  std::pair<Eigen::Index, Eigen::Index> flat_index(
      const std::vector<Eigen::Index>& multi_index, Eigen::Index d) const;

  /// Inverse of flat_index.
  std::vector<Eigen::Index> unflat_index(Eigen::Index row, Eigen::Index col,
                                         Eigen::Index d) const;
};

/// T[i,j,k] = sum_m a_m[i] a_m[j] a_m[k]; symmetric by construction.
Tensor3 build_symmetric_tensor(const ComponentSet& components);

/// out[k] = sum_{i,j} T[i,j,k] u[i] v[j]
Eigen::VectorXd contract3(const Tensor3& T, const Eigen::VectorXd& u,
                          const Eigen::VectorXd& v);

/// <T, b^{x3}>
double eval3(const Tensor3& T, const Eigen::VectorXd& b);

/// U[i,j] = u[i*d + j]; length of u must be a perfect square.
Eigen::MatrixXd reshape_vec_to_matrix(const Eigen::VectorXd& u);

}  // namespace otd
