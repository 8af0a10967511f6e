#pragma once

#include "opdiff/spectral/hermitian.hpp"

namespace opdiff::spectral {

// G0, G1 : C^n -> C^k with H1 - H0 = G1* G0.
struct RectFactor {
  Matrix g0;
  Matrix g1;

  RectFactor(Matrix g0_, Matrix g1_);
  Eigen::Index target_dim() const { return g0.rows(); }
  Eigen::Index source_dim() const { return g0.cols(); }
  Matrix perturbation() const { return g1.adjoint() * g0; }
};

class OperatorPair {
 public:
  static constexpr double kFactorTol = 1e-12;

  // Validates H1 - H0 = G1* G0 entrywise.
  OperatorPair(HermitianOperator h0, HermitianOperator h1, RectFactor factor);
  // Builds H1 = H0 + G1* G0; the perturbation must be Hermitian.
  static OperatorPair assemble(const HermitianOperator& h0, RectFactor factor);

  const HermitianOperator& h0() const { return h0_; }
  const HermitianOperator& h1() const { return h1_; }
  const RectFactor& factor() const { return factor_; }
  Eigen::Index dim() const { return h0_.dim(); }
  std::uint64_t hash() const;

 private:
  HermitianOperator h0_;
  HermitianOperator h1_;
  RectFactor factor_;
};

}  // namespace opdiff::spectral
