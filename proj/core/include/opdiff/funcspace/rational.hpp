#pragma once

#include <utility>
#include <vector>

#include "opdiff/funcspace/sampled_function.hpp"

namespace opdiff::funcspace {

// coeffs[k-1] multiplies (x - pole)^{-k}.
struct PoleTerm {
  cplx pole;
  std::vector<cplx> coeffs;
};

// Bounded rational function on the line. Two equivalent storage forms:
// partial fractions, or a finite series in zeta(x) = (x - i)/(x + i), whose
// poles sit at -i (positive powers) and +i (negative powers). The series form
// keeps high-order Fejer sums stable; expanding it into partial fractions
// would need binomial coefficients far beyond double range.
class RationalFunction {
 public:
  static RationalFunction partial_fractions(cplx constant, std::vector<PoleTerm> terms);
  // coeffs[j + order] multiplies zeta^j for j = -order..order.
  static RationalFunction cayley_series(std::vector<cplx> coeffs, int order);

  cplx operator()(double x) const;
  cplx derivative(double x) const;

  // Distinct poles with multiplicities.
  std::vector<std::pair<cplx, int>> poles() const;
  int total_multiplicity() const;

  SampledFunction as_function(std::string name = "rational") const;

 private:
  cplx constant_{};
  std::vector<PoleTerm> terms_;
  std::vector<cplx> series_;
  int order_ = -1;
};

// omega(zeta) = i (1 + zeta)/(1 - zeta) maps the circle to the line; inverse zeta = (x - i)/(x + i).
cplx circle_to_line(cplx zeta);
cplx line_to_circle(cplx x);

// Fejer mean of a Laurent polynomial: coefficient j scaled by (1 - |j|/n), zero for |j| >= n.
// Input and output are indexed j + m for j = -m..m.
std::vector<cplx> fejer_mean(const std::vector<cplx>& coeffs, int m, int n);

// Pulls f to the circle, takes the order-n Fejer sum and pushes it back.
RationalFunction fejer_rational_approx(const SampledFunction& f, int n, int quadrature_points = 0);

}  // namespace opdiff::funcspace
