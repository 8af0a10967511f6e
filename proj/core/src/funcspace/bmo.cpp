#include "opdiff/funcspace/bmo.hpp"

#include <algorithm>
#include <cmath>

namespace opdiff::funcspace {

double bmo_mean_oscillation(const SampledFunction& f) {
  if (!f.grid()) throw InvalidInput("mean oscillation needs grid samples");
  const std::vector<cplx>& v = f.values();
  const std::size_t n = v.size();
  double best = 0.0;
  for (std::size_t len = 2; len <= n; len *= 2) {
    for (std::size_t start = 0; start + len <= n; start += len) {
      cplx mean{};
      for (std::size_t i = start; i < start + len; ++i) mean += v[i];
      mean /= static_cast<double>(len);
      double dev = 0.0;
      for (std::size_t i = start; i < start + len; ++i) dev += std::abs(v[i] - mean);
      best = std::max(best, dev / static_cast<double>(len));
    }
  }
  return best;
}

}  // namespace opdiff::funcspace
