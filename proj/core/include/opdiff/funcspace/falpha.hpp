#pragma once

#include <functional>
#include <vector>

#include "opdiff/funcspace/sampled_function.hpp"

namespace opdiff::funcspace {

// F(x) = a_+ chi0(x) |log|x||^{-alpha} for x > 0, a_- chi0(x) |log|x||^{-alpha} for x < 0, F(0) = 0.
struct FAlphaSpec {
  double alpha = 1.0;
  cplx a_plus{1.0, 0.0};
  cplx a_minus{0.0, 0.0};
  double c = 0.75;
  std::function<double(double)> cutoff;
  std::function<double(double)> cutoff_derivative;

  // Uses the default cutoff chi0(x) = 1 - s((|x| - c/2) / (c/2)).
  static FAlphaSpec make(double alpha, cplx a_plus, cplx a_minus, double c = 0.75);
  void validate() const;
};

cplx f_alpha_value(const FAlphaSpec& spec, double x);
SampledFunction f_alpha_function(const FAlphaSpec& spec);
SampledFunction f_alpha_sample(const FAlphaSpec& spec, const UniformGrid& grid);

struct FourierValue {
  cplx value;
  double error = 0.0;  // accumulated quadrature error estimate
};

// (1/2pi) int e^{-itx} F(x) dx by panelled Gauss-Kronrod quadrature.
FourierValue f_alpha_fourier(const FAlphaSpec& spec, double t);

// Leading asymptotic term of the transform; zero when a_+ = a_- and alpha = 0.
cplx f_alpha_leading_term(const FAlphaSpec& spec, double t);

struct FourierAsymptoticRow {
  double t = 0.0;
  cplx value;
  cplx leading;
  cplx ratio;  // NaN when the leading term vanishes
  double error = 0.0;
};

std::vector<FourierAsymptoticRow> f_alpha_fourier_asymptotics(const FAlphaSpec& spec,
                                                              const std::vector<double>& t_values);

}  // namespace opdiff::funcspace
