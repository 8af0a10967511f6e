#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "opdiff/smoothness/multop_model.hpp"

namespace opdiff::smoothness {

// Supremum over contiguous cell unions [first, last].
struct IntervalSup {
  double value = 0.0;
  std::size_t first = 0;
  std::size_t last = 0;
};

// sup_Lambda ||G E(Lambda)|| / |Lambda|^{1/2}, the Smooth norm of the model.
IntervalSup kato_norm_interval(const MultOpModel& model);

// ||G E(Lambda)||_p for the cell union [first, last], without normalization.
double interval_schatten(const MultOpModel& model, std::size_t first, std::size_t last, spectral::SchattenIndex p);

struct ResolventOptions {
  std::vector<double> eps_grid;                     // empty: model default
  std::optional<std::pair<double, double>> window;  // empty: spectrum hull +- 100 max(eps)
};

struct ResolventNormEstimate {
  double c1 = 0.0;
  double c2 = 0.0;
  double c1_error = 0.0;
  double c2_error = 0.0;
  double eps_c1 = 0.0;
  double eps_c2 = 0.0;
  double tail_fraction = 0.0;
  std::pair<double, double> window;
  std::vector<double> eps_grid;
  std::vector<double> c1_by_eps;
  std::vector<double> c2_by_eps;
};

// Geometric grid from dx to (x_max - x_min)/10.
std::vector<double> default_eps_grid(const MultOpModel& model, int count = 8);

// Resolvent and Poisson-square forms with exact x-integration over the window
// and maximization over unit u by the top eigenvalue of the assembled form.
ResolventNormEstimate kato_norm_resolvent(const MultOpModel& model, const ResolventOptions& opts = {});
ResolventNormEstimate kato_norm_resolvent(const spectral::HermitianOperator& h, const Matrix& g,
                                          const ResolventOptions& opts);

struct SmoothPNorm {
  double value = 0.0;
  bool lower_bound_only = false;  // p < 2
  std::size_t first = 0;
  std::size_t last = 0;
};

// sup over contiguous cell unions of |Lambda|^{-1/2} ||G E(Lambda)||_p.
SmoothPNorm smooth_p_norm(const MultOpModel& model, spectral::SchattenIndex p);

// sup over unit phi of ||G phi(M)||_p. Exact (a block maximum) for p >= 2; for
// p < 2 the squared norm is a concave function of the weights |phi_i|^2 dx and
// is maximized by exponentiated-gradient ascent with a Frank-Wolfe upper bound.
struct SmoothPBound {
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
};
SmoothPBound smooth_p_norm_definition(const MultOpModel& model, spectral::SchattenIndex p);

struct BesselReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gram_defect = 0.0;
  bool pass = false;
};

// u holds M*h cell values; psi is M x n with orthonormal columns under the dx-weighted product.
BesselReport bessel_property_check(const MultOpModel& model, const Vector& u, const Matrix& psi);

struct SmoothNormReport {
  double norm_b3 = 0.0;  // interval sup, exact in the model
  double c3 = 0.0;       // norm_b3^2
  double c1 = 0.0;
  double c2 = 0.0;
  double c1_error = 0.0;
  double c2_error = 0.0;
  std::map<double, double> p_norms;
  std::vector<double> eps_grid;
  std::pair<double, double> window;
};

SmoothNormReport smoothness_report(const MultOpModel& model, const std::vector<double>& p_values,
                                   const ResolventOptions& opts = {});

}  // namespace opdiff::smoothness
