#include "opdiff/lab/ensemble.hpp"

#include "dense.hpp"

#include <cmath>

namespace opdiff::lab {

Matrix scaled_hermitian(Philox4x64& rng, Eigen::Index dim, double radius) {
  const Matrix x = random_hermitian(rng, dim);
  const double top = detail::hermitian_eigenvalues(x).cwiseAbs().maxCoeff();
  // Slightly inside the interval so rounding cannot push an eigenvalue past it.
  const double s = top > 0 ? radius * (1.0 - 1e-12) / top : 1.0;
  Matrix h = x * s;
  return 0.5 * (h + h.adjoint());
}

spectral::OperatorPair ensemble(std::uint64_t seed, Eigen::Index dim, Eigen::Index k_dim, std::uint64_t stream) {
  if (dim < 2 || k_dim < 1) throw InvalidInput("ensemble needs dim >= 2 and k_dim >= 1");
  Philox4x64 rng(seed, stream);
  spectral::HermitianOperator h0(scaled_hermitian(rng, dim, 4.0));
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim * k_dim));
  Matrix g0 = random_complex_gaussian(rng, k_dim, dim) * scale;
  Matrix g1 = g0;
  for (Eigen::Index r = 0; r < k_dim; ++r)
    if (rng() >> 63) g1.row(r) *= -1.0;
  return spectral::OperatorPair::assemble(h0, spectral::RectFactor(std::move(g0), std::move(g1)));
}

doi::QuasiPair quasi_ensemble(std::uint64_t seed, Eigen::Index dim, Eigen::Index k_dim, std::uint64_t stream) {
  if (dim < 2 || k_dim < 1) throw InvalidInput("ensemble needs dim >= 2 and k_dim >= 1");
  Philox4x64 rng(seed, stream);
  spectral::HermitianOperator h0(scaled_hermitian(rng, dim, 4.0));
  // A different radius keeps the two extreme eigenvalues apart; equal radii
  // would make them coincide to rounding and the Sylvester solve blow up.
  spectral::HermitianOperator h1(scaled_hermitian(rng, dim, 3.5));
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim * k_dim));
  const Matrix g0 = random_complex_gaussian(rng, k_dim, dim) * scale;
  const Matrix g1 = random_complex_gaussian(rng, k_dim, dim) * scale;
  return doi::QuasiPair::solve(h0, h1, g0, g1);
}

}  // namespace opdiff::lab
