#pragma once

#include <string>
#include <vector>

#include "opdiff/funcspace/sampled_function.hpp"

namespace opdiff::funcspace {

// s(t) = e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}), clamped to [0, 1] outside (0, 1).
double smooth_step(double t);
double smooth_step_derivative(double t);

// Littlewood-Paley window w(x) = chi(x) - chi(2x) with chi(x) = s(2 - x).
class DyadicWindow {
 public:
  DyadicWindow(int j_min, int j_max);

  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }

  static double chi(double x);
  static double bump(double x);
  // w(xi / 2^j)
  static double band(int j, double xi);

  // sum_{j=j_min}^{j_max} w(x / 2^j), by direct summation.
  double partition_sum(double x) const;
  // chi(x / 2^{j_max}) - chi(x * 2^{1 - j_min}), the telescoped closed form.
  double telescoped(double x) const;

  std::string hash() const;

 private:
  int j_min_;
  int j_max_;
};

DyadicWindow dyadic_window_build(int j_min, int j_max);

struct BesovBand {
  int j = 0;
  double positive = 0.0;  // ||Pi_j f||_p^p
  double negative = 0.0;  // ||Pi_{-j} f||_p^p
  double term = 0.0;      // 2^j (positive + negative)
};

struct BesovResult {
  double norm = 0.0;
  double p = 0.0;
  std::vector<BesovBand> bands;
  std::string window_hash;
};

// Largest j whose band lies below the grid Nyquist frequency pi/dx.
int nyquist_band_limit(const UniformGrid& grid);

// Dyadic Besov functional with weight 2^j, computed by FFT band filtering.
BesovResult besov_norm(const SampledFunction& f, double p, const DyadicWindow& window);

// Least-squares slope of log(term_j) against log(j) over j in [j_lo, j_hi].
double loglog_slope(const std::vector<BesovBand>& bands, int j_lo, int j_hi);

}  // namespace opdiff::funcspace
