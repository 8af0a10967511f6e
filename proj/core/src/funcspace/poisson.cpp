#include "opdiff/funcspace/poisson.hpp"

namespace opdiff::funcspace {

PoissonResult poisson_smooth(const SampledFunction& f, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("Poisson smoothing needs eps > 0");
  if (!f.grid()) throw InvalidInput("Poisson smoothing needs grid samples");
  const UniformGrid& g = *f.grid();
  const double dx = g.step();
  const std::size_t n = g.n;
  // The kernel depends only on the index offset.
  std::vector<double> k(n);
  for (std::size_t d = 0; d < n; ++d) k[d] = poisson_kernel(static_cast<double>(d) * dx, eps) * dx;
  const std::vector<cplx>& v = f.values();
  std::vector<cplx> out(n);
  std::vector<double> mass(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc{};
    double m = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = k[i > j ? i - j : j - i];
      acc += w * v[j];
      m += w;
    }
    out[i] = acc;
    mass[i] = m;
  }
  return {SampledFunction::samples(g, std::move(out), "poisson(" + f.name() + ")"), std::move(mass)};
}

}  // namespace opdiff::funcspace
