#include "opdiff/doi/sharpness.hpp"

#include <cmath>
#include <limits>

#include "opdiff/spectral/schatten.hpp"

namespace opdiff::doi {

namespace {

RealVector grid_nodes(const funcspace::UniformGrid& g) { return g.nodes(); }

Matrix conjugated(const Matrix& j, const RealVector& x) {
  Matrix h = j * x.cast<cplx>().asDiagonal() * j;
  return 0.5 * (h + h.adjoint());
}

}  // namespace

SharpnessContext::SharpnessContext(const funcspace::UniformGrid& g)
    : grid(g),
      j_line(divdiff::hilbert_transform(divdiff::HilbertVariant::line_kernel, g.n, g).matrix),
      j_inv(divdiff::hilbert_transform(divdiff::HilbertVariant::involution_projected, g.n, g).matrix),
      h0(HermitianOperator::diagonal(grid_nodes(g))),
      h1(conjugated(j_inv, grid_nodes(g))) {}

SharpnessReport sharpness_pair(const SharpnessContext& ctx, const SampledFunction& f) {
  const auto& g = ctx.grid;
  const Eigen::Index n = static_cast<Eigen::Index>(g.n);
  SharpnessReport r;
  r.n = g.n;
  const DiagonalRule rule = divdiff::default_rule(f);
  r.derivative_fallback = rule != DiagonalRule::derivative;

  Vector fx(n);
  double fmax = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    fx[i] = f.checked(g.at(static_cast<std::size_t>(i)));
    fmax = std::max(fmax, std::abs(fx[i]));
  }
  r.endpoint_mismatch = fmax > 0 ? std::abs(fx[0] - fx[n - 1]) / fmax : 0.0;

  const Matrix kernel = divdiff::divided_difference_kernel(f, g, rule).matrix;
  const auto fh0 = fx.asDiagonal();

  // (1) [J, f(H0)] against (1/(pi i)) f_check dx off the diagonal.
  const Matrix comm = ctx.j_line * fh0 - fh0 * ctx.j_line;
  const cplx c = 1.0 / (kPi * kI);
  for (Eigen::Index m = 0; m < n; ++m)
    for (Eigen::Index k = 0; k < n; ++k)
      if (m != k) r.commutator_residual = std::max(r.commutator_residual, std::abs(comm(m, k) - c * kernel(m, k)));

  // (2) D(f) = f(H1) - f(H0) against [Jt, f(H0)] Jt.
  Matrix d = spectral::func_calculus(ctx.h1, f);
  d.diagonal() -= fx;
  const Matrix chain = (ctx.j_inv * fh0 - fh0 * ctx.j_inv) * ctx.j_inv;
  r.involution_residual = relative_residual(chain, d);

  // (3) ||D(f)|| against 2 pi A ||f||_BMO with A = 1/pi.
  r.d_norm = spectral::schatten_norm(d, spectral::SchattenIndex::infinity());
  r.bmo_estimate = spectral::schatten_norm(kernel, spectral::SchattenIndex::infinity()) / kTwoPi;

  const Eigen::Index edge = static_cast<Eigen::Index>(std::ceil(0.05 * static_cast<double>(n)));
  double tail = 0.0;
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const bool outer = m < edge || m >= n - edge || k < edge || k >= n - edge;
      if (outer) tail += std::norm(kernel(m, k));
    }
  }
  const double total = kernel.squaredNorm();
  r.tail_fraction = total > 0 ? tail / total : 0.0;
  r.excluded = r.tail_fraction >= 0.2;
  r.ratio = r.bmo_estimate > 0 ? r.d_norm / (2.0 * r.bmo_estimate) : std::numeric_limits<double>::quiet_NaN();
  return r;
}

SharpnessReport sharpness_pair(const funcspace::UniformGrid& grid, const SampledFunction& f) {
  return sharpness_pair(SharpnessContext(grid), f);
}

}  // namespace opdiff::doi
