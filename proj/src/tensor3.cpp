#include "otd/tensor3.hpp"

#include <algorithm>
#include <cmath>

namespace otd {

FlatteningSpec::FlatteningSpec(std::vector<int> rows, std::vector<int> cols)
    : row_modes(std::move(rows)), col_modes(std::move(cols)) {
  std::vector<int> all = row_modes;
  all.insert(all.end(), col_modes.begin(), col_modes.end());
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("FlatteningSpec: modes must cover 1..order exactly once");
}

std::pair<Eigen::Index, Eigen::Index> FlatteningSpec::flat_index(
    const std::vector<Eigen::Index>& multi_index, Eigen::Index d) const {
  if (multi_index.size() != static_cast<size_t>(order()))
    throw std::invalid_argument("flat_index: wrong multi-index length");
  for (Eigen::Index x : multi_index)
    if (x < 0 || x >= d) throw std::out_of_range("flat_index: index out of range");
  Eigen::Index row = 0, col = 0;
  for (int m : row_modes) row = row * d + multi_index[static_cast<size_t>(m - 1)];
  for (int m : col_modes) col = col * d + multi_index[static_cast<size_t>(m - 1)];
  return {row, col};
}

std::vector<Eigen::Index> FlatteningSpec::unflat_index(Eigen::Index row, Eigen::Index col,
                                                       Eigen::Index d) const {
  std::vector<Eigen::Index> multi(static_cast<size_t>(order()), 0);
  for (auto it = row_modes.rbegin(); it != row_modes.rend(); ++it) {
    multi[static_cast<size_t>(*it - 1)] = row % d;
    row /= d;
  }
  for (auto it = col_modes.rbegin(); it != col_modes.rend(); ++it) {
    multi[static_cast<size_t>(*it - 1)] = col % d;
    col /= d;
  }
  if (row != 0 || col != 0) throw std::out_of_range("unflat_index: index out of range");
  return multi;
}

Tensor3 build_symmetric_tensor(const ComponentSet& components) {
  const Eigen::Index d = components.rows();
  const Eigen::Index n = components.cols();
  if (n < 1) throw std::invalid_argument("build_symmetric_tensor: need at least one component");
  Tensor3 T(d);
  // accumulate rank-1 cubes; outer product per slice keeps it cache friendly
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> flat(
      T.data(), d, d * d);
  for (Eigen::Index m = 0; m < n; ++m) {
    const Eigen::VectorXd a = components.col(m);
    Eigen::MatrixXd outer = a * a.transpose();  // d x d
    Eigen::Map<const Eigen::VectorXd> outer_vec(outer.data(), d * d);
    // row-major (j,k) pairs: outer is symmetric so col-major vec works
    flat.noalias() += a * outer_vec.transpose();
  }
  return T;
}

Eigen::VectorXd contract3(const Tensor3& T, const Eigen::VectorXd& u,
                          const Eigen::VectorXd& v) {
  const Eigen::Index d = T.dim();
  if (u.size() != d || v.size() != d)
    throw std::invalid_argument("contract3: dimension mismatch");
  // out[k] = sum_i u[i] * (slice_i v)[k] with slice_i the d x d matrix T[i,:,:]
  Eigen::VectorXd tmp = T.flatten_1_23().transpose() * u;  // (jk) vector
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      tmp_mat(tmp.data(), d, d);
  return tmp_mat.transpose() * v;
}

double eval3(const Tensor3& T, const Eigen::VectorXd& b) {
  return contract3(T, b, b).dot(b);
}

Eigen::MatrixXd reshape_vec_to_matrix(const Eigen::VectorXd& u) {
  const auto len = u.size();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(len))));
  if (d * d != len) throw std::invalid_argument("reshape_vec_to_matrix: length is not a square");
  Eigen::MatrixXd U(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) U(i, j) = u[i * d + j];
  return U;
}

}  // namespace otd
