#pragma once

#include "opdiff/divdiff/hilbert.hpp"
#include "opdiff/doi/doi.hpp"

namespace opdiff::doi {

// H0 = multiplication by the grid, J the line-kernel Hilbert transform,
// Jt its involution projection and H1 = Jt H0 Jt. Reusable across functions.
struct SharpnessContext {
  funcspace::UniformGrid grid;
  Matrix j_line;
  Matrix j_inv;
  HermitianOperator h0;
  HermitianOperator h1;

  explicit SharpnessContext(const funcspace::UniformGrid& g);
};

struct SharpnessReport {
  std::size_t n = 0;
  double commutator_residual = 0.0;  // max |[J, f(H0)] - (1/(pi i)) f_check dx| off the diagonal
  double involution_residual = 0.0;  // relative Frobenius residual of D(f) against [Jt, f(H0)] Jt
  double d_norm = 0.0;               // ||D(f)||
  double bmo_estimate = 0.0;         // ||f_check|| / (2 pi)
  double ratio = 0.0;                // d_norm / (2 bmo_estimate); NaN when skipped
  double tail_fraction = 0.0;        // f_check Frobenius mass in the outer 5% rows and columns
  bool excluded = false;             // tail_fraction >= 20%
  bool derivative_fallback = false;  // symmetric difference used on the diagonal
  double endpoint_mismatch = 0.0;    // |f(x_min) - f(x_max)| / max |f|
};

SharpnessReport sharpness_pair(const SharpnessContext& ctx, const SampledFunction& f);
SharpnessReport sharpness_pair(const funcspace::UniformGrid& grid, const SampledFunction& f);

}  // namespace opdiff::doi
