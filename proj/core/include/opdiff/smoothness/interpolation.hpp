#pragma once

#include <vector>

#include "opdiff/smoothness/multop_model.hpp"

namespace opdiff::smoothness {

// g_z = omega |g|^{q z / 2} cellwise, from the polar decomposition g = omega |g|.
class AnalyticFamily {
 public:
  AnalyticFamily(MultOpModel base, double q);

  double q() const { return q_; }
  const MultOpModel& base() const { return base_; }

  std::vector<Matrix> evaluate(cplx z) const;

  // max_k ||g_{2/q,k} - g_k||_max relative to max_k ||g_k||_max.
  double reconstruction_residual() const;
  // max over y and cells of ||g_{iy,k}||_op.
  double unit_bound(const std::vector<double>& y_values) const;
  // max over y and cells of | ||g_{1+iy,k}||_2^2 - ||g_k||_q^q | / ||g_k||_q^q.
  double endpoint_equality(const std::vector<double>& y_values) const;
  // max over sampled z and cells of ||g_{z,k}||_op / max(1, ||g_k||_op^{q/2}).
  double strip_bound_ratio(const std::vector<cplx>& z_values) const;

 private:
  struct Polar {
    Matrix u;          // left singular vectors with s > 0
    RealVector s;      // positive singular values
    Matrix v;          // right singular vectors with s > 0
  };
  MultOpModel base_;
  double q_;
  std::vector<Polar> polar_;
};

AnalyticFamily interpolation_family(const MultOpModel& base, double q);

}  // namespace opdiff::smoothness
