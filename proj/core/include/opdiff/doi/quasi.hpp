#pragma once

#include "opdiff/doi/doi.hpp"

namespace opdiff::doi {

// (H0, H1, J, G0, G1) with H1 J - J H0 = G1* G0.
class QuasiPair {
 public:
  QuasiPair(HermitianOperator h0, HermitianOperator h1, Matrix j, Matrix g0, Matrix g1);

  // Solves H1 J - J H0 = G1* G0 for J in the eigenbases; spectra must be disjoint.
  static QuasiPair solve(const HermitianOperator& h0, const HermitianOperator& h1, const Matrix& g0,
                         const Matrix& g1);

  const HermitianOperator& h0() const { return h0_; }
  const HermitianOperator& h1() const { return h1_; }
  const Matrix& j() const { return j_; }
  const Matrix& g0() const { return g0_; }
  const Matrix& g1() const { return g1_; }
  double factor_defect() const { return defect_; }

 private:
  HermitianOperator h0_;
  HermitianOperator h1_;
  Matrix j_;
  Matrix g0_;
  Matrix g1_;
  double defect_ = 0.0;
};

struct QuasiReport {
  Matrix d_j;  // f(H1) J - J f(H0)
  double residual = 0.0;
  double d_norm = 0.0;
};

QuasiReport quasicommutator(const QuasiPair& qpair, const SampledFunction& f,
                            DiagonalRule rule = DiagonalRule::derivative);

struct ProductFormReport {
  double identity_residual = 0.0;  // phi1(H1)* D(f) phi0(H0) against D_J(f)
  double doi_residual = 0.0;       // D_J(f) against DOI(f_check) for the quasipair
  double factor_defect = 0.0;
  double d_norm = 0.0;
};

ProductFormReport product_form_check(const OperatorPair& pair, const SampledFunction& f, const SampledFunction& phi0,
                                     const SampledFunction& phi1, DiagonalRule rule = DiagonalRule::derivative);

}  // namespace opdiff::doi
