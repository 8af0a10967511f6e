#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "opdiff/common.hpp"
#include "opdiff/spectral/hermitian.hpp"
#include "opdiff/spectral/schatten.hpp"

namespace opdiff::smoothness {

// Multiplication by x on L^2([x_min, x_max]; C^h) discretized into M cells of
// width dx, together with G f = sum_i g_i f_i dx for k x h blocks g_i.
class MultOpModel {
 public:
  MultOpModel(double x_min, double x_max, std::vector<Matrix> g_blocks);

  static MultOpModel identity(double x_min, double x_max, std::size_t cells, Eigen::Index dim);
  static MultOpModel random(double x_min, double x_max, std::size_t cells, Eigen::Index h_dim, Eigen::Index k_dim,
                            std::uint64_t seed, std::uint64_t stream = 0);
  // g = sum_n 1_{(n-1, n)} (., e_n) e_n on [0, n].
  static MultOpModel block_counterexample(std::size_t n);
  // g(x) = A + B sigma(x), sigma a smooth step across the middle third; A, B random.
  static MultOpModel plateau(double x_min, double x_max, std::size_t cells, Eigen::Index h_dim, Eigen::Index k_dim,
                             std::uint64_t seed, std::uint64_t stream = 0);
  // Blocks g(midpoint_i).
  static MultOpModel from_function(double x_min, double x_max, std::size_t cells,
                                   const std::function<Matrix(double)>& g);
  // One row per cell with k*h complex entries as interleaved (re, im) in row-major block order.
  static MultOpModel from_csv(const std::string& path, double x_min, double x_max, Eigen::Index h_dim,
                              Eigen::Index k_dim);

  std::size_t cells() const { return blocks_.size(); }
  Eigen::Index h_dim() const { return blocks_.front().cols(); }
  Eigen::Index k_dim() const { return blocks_.front().rows(); }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double dx() const { return (x_max_ - x_min_) / static_cast<double>(blocks_.size()); }
  double midpoint(std::size_t i) const { return x_min_ + (static_cast<double>(i) + 0.5) * dx(); }
  const Matrix& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  // k x (M h) matrix [g_1 sqrt(dx), ..., g_M sqrt(dx)]: G in orthonormal coordinates.
  Matrix g_operator() const;
  // Cell midpoints, each repeated h times.
  RealVector spectrum() const;
  spectral::HermitianOperator multiplication_operator() const;

  // max_i ||g_i||_p.
  double max_block_norm(spectral::SchattenIndex p) const;

  MultOpModel scaled(cplx c) const;

 private:
  double x_min_;
  double x_max_;
  std::vector<Matrix> blocks_;
};

}  // namespace opdiff::smoothness
