#include "opdiff/doi/quasi.hpp"

#include <cmath>
#include <sstream>

namespace opdiff::doi {

QuasiPair::QuasiPair(HermitianOperator h0, HermitianOperator h1, Matrix j, Matrix g0, Matrix g1)
    : h0_(std::move(h0)), h1_(std::move(h1)), j_(std::move(j)), g0_(std::move(g0)), g1_(std::move(g1)) {
  const Eigen::Index n = h0_.dim();
  if (h1_.dim() != n || j_.rows() != n || j_.cols() != n || g0_.cols() != n || g1_.cols() != n ||
      g0_.rows() != g1_.rows())
    throw InvalidInput("quasipair shapes do not match");
  const Matrix lhs = h1_.entries() * j_ - j_ * h0_.entries();
  defect_ = max_abs(lhs - g1_.adjoint() * g0_);
  // Rounding in the two products scales with the sizes of H and J.
  const double scale = std::max(1.0, (max_abs(h0_.entries()) + max_abs(h1_.entries())) * max_abs(j_) *
                                         std::sqrt(static_cast<double>(n)));
  if (defect_ > 1e-12 * scale) {
    std::ostringstream os;
    os << "H1 J - J H0 differs from G1* G0 by " << defect_;
    throw InvalidInput(os.str());
  }
}

QuasiPair QuasiPair::solve(const HermitianOperator& h0, const HermitianOperator& h1, const Matrix& g0,
                           const Matrix& g1) {
  const RealVector& l1 = h1.eigenvalues();
  const RealVector& l0 = h0.eigenvalues();
  const Matrix& v1 = h1.eigenvectors();
  const Matrix& v0 = h0.eigenvectors();
  Matrix c = (g1 * v1).adjoint() * (g0 * v0);
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      const double gap = l1[i] - l0[j];
      if (gap == 0.0) throw NumericalRejection("Sylvester solve needs disjoint spectra");
      c(i, j) /= gap;
    }
  }
  return QuasiPair(h0, h1, v1 * c * v0.adjoint(), g0, g1);
}

QuasiReport quasicommutator(const QuasiPair& qpair, const SampledFunction& f, DiagonalRule rule) {
  QuasiReport r;
  r.d_j = spectral::func_calculus(qpair.h1(), f) * qpair.j() - qpair.j() * spectral::func_calculus(qpair.h0(), f);
  const Matrix doi =
      doi_apply(qpair.h0(), qpair.h1(), qpair.g0(), qpair.g1(), SchurSymbol::divided_difference(f, rule)).matrix;
  r.residual = relative_residual(r.d_j, doi);
  r.d_norm = r.d_j.norm();
  return r;
}

ProductFormReport product_form_check(const OperatorPair& pair, const SampledFunction& f, const SampledFunction& phi0,
                                     const SampledFunction& phi1, DiagonalRule rule) {
  const Matrix p0 = spectral::func_calculus(pair.h0(), phi0);
  const Matrix p1 = spectral::func_calculus(pair.h1(), phi1);
  const Matrix j = p1.adjoint() * p0;
  const QuasiPair q(pair.h0(), pair.h1(), j, pair.factor().g0 * p0, pair.factor().g1 * p1);
  const Matrix d = spectral::func_calculus(pair.h1(), f) - spectral::func_calculus(pair.h0(), f);
  const QuasiReport qr = quasicommutator(q, f, rule);
  ProductFormReport r;
  r.identity_residual = relative_residual(qr.d_j, p1.adjoint() * d * p0);
  r.doi_residual = qr.residual;
  r.factor_defect = q.factor_defect();
  r.d_norm = qr.d_norm;
  return r;
}

}  // namespace opdiff::doi
