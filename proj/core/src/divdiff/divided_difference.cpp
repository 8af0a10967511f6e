#include "opdiff/divdiff/divided_difference.hpp"

#include "opdiff/spectral/schatten.hpp"

namespace opdiff::divdiff {

DiagonalRule default_rule(const SampledFunction& f) {
  return f.has_derivative() ? DiagonalRule::derivative : DiagonalRule::symmetric_difference;
}

DividedDifferenceKernel divided_difference_kernel(const SampledFunction& f, const UniformGrid& grid,
                                                  DiagonalRule rule) {
  if (rule == DiagonalRule::derivative && !f.has_derivative())
    throw InvalidInput("derivative diagonal rule needs a derivative closure");
  const std::size_t n = grid.n;
  const double dx = grid.step();
  std::vector<double> x(n);
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = grid.at(i);
    v[i] = f.is_analytic() ? f.checked(x[i]) : f(x[i]);
  }
  DividedDifferenceKernel k{grid, rule, Matrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))};
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx e;
      if (m != j) {
        e = (v[m] - v[j]) / (x[m] - x[j]);
      } else if (rule == DiagonalRule::derivative) {
        e = *f.derivative(x[m]);
      } else if (f.is_analytic()) {
        e = (f(x[m] + dx) - f(x[m] - dx)) / (2.0 * dx);
      } else if (m == 0) {
        e = (v[1] - v[0]) / dx;
      } else if (m + 1 == n) {
        e = (v[n - 1] - v[n - 2]) / dx;
      } else {
        e = (v[m + 1] - v[m - 1]) / (2.0 * dx);
      }
      k.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j)) = e * dx;
    }
  }
  return k;
}

double bmo_norm_via_kernel(const SampledFunction& f, const UniformGrid& grid) {
  const auto k = divided_difference_kernel(f, grid, default_rule(f));
  return spectral::schatten_norm(k.matrix, spectral::SchattenIndex::infinity()) / kTwoPi;
}

}  // namespace opdiff::divdiff
