#pragma once

#include <vector>

#include "opdiff/funcspace/sampled_function.hpp"

namespace opdiff::funcspace {

inline double poisson_kernel(double x, double eps) { return eps / (kPi * (x * x + eps * eps)); }

struct PoissonResult {
  SampledFunction smoothed;
  std::vector<double> mass;  // sum_j P_eps(x_i - x_j) dx at each node
};

PoissonResult poisson_smooth(const SampledFunction& f, double eps);

}  // namespace opdiff::funcspace
