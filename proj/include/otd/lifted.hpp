#pragma once

#include "otd/tensor3.hpp"

namespace otd {

/// Matrix-free application of the lifted d^3 x d^3 operator
///   M = sum_{i,j,k,l} <a_i,a_j><a_i,a_k><a_i,a_l> (a_j a_j^T) (x) (a_k a_k^T) (x) (a_l a_l^T)
/// built from T alone via a four-stage rectangular matmul decomposition:
///   (a) per column, multiply the d x d^2 reshape by T_{12|3}
///   (b) gram G = T_{12|3} T_{12|3}^T, cached (d^2 x d^2)
///   (c) permuted G times permuted stage-(a) output  (the bottleneck)
///   (d) final multiply by T_{12|3}, reshape back
class LiftedOperator {
 public:
  explicit LiftedOperator(Tensor3 T);

  Eigen::Index dim() const { return d_; }
  Eigen::Index lifted_dim() const { return d_ * d_ * d_; }
  const Tensor3& tensor() const { return T_; }
  const Eigen::MatrixXd& gram() const { return gram_perm_; }

  /// M * X for a d^3 x k block.
  Eigen::MatrixXd apply(const Eigen::MatrixXd& X) const;

  /// Dense materialization, column by column through apply(). Guarded to d <= 12.
  Eigen::MatrixXd dense() const;

 private:
  Eigen::Index d_;
  Tensor3 T_;
  Eigen::MatrixXd B_;          // T_{12|3}, d^2 x d
  Eigen::MatrixXd gram_perm_;  // G permuted to [(z3,x2),(z1,y2)] pairing
};

/// The quadruple-sum operator assembled entry-wise from the components.
/// Test oracle; guarded to d <= 12.
Eigen::MatrixXd dense_quadsum_oracle(const ComponentSet& components);

// 4-index permutation of a d^2 x d^2 matrix seen as [(p,q),(r,s)]:
// out[(perm picks)] — used by the staged contraction and by tests.
Eigen::MatrixXd permute_pairs(const Eigen::MatrixXd& M, Eigen::Index d, int p0, int p1,
                              int p2, int p3);

}  // namespace otd
