#pragma once

#include <memory>

#include "opdiff/common.hpp"
#include "opdiff/funcspace/sampled_function.hpp"

namespace opdiff::spectral {

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns
};

// Dense self-adjoint matrix with a lazily computed, cached eigendecomposition.
// Copies share the cache; the decomposition is computed once even under
// concurrent access.
class HermitianOperator {
 public:
  static constexpr double kSymmetryTol = 1e-12;
  static constexpr double kReconstructionTol = 1e-10;

  explicit HermitianOperator(Matrix entries);
  static HermitianOperator diagonal(const RealVector& d);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  const RealVector& eigenvalues() const;
  const Matrix& eigenvectors() const;

 private:
  struct Cache;
  Matrix entries_;
  std::shared_ptr<Cache> cache_;

  const Cache& decomposed() const;
};

SpectralDecomposition eig_decompose(const HermitianOperator& a);

// V diag(f(lambda_i)) V*.
Matrix func_calculus(const HermitianOperator& a, const funcspace::SampledFunction& f);

// Same with f given as a plain closure.
Matrix func_calculus(const HermitianOperator& a, const std::function<cplx(double)>& f);

// Spectral projection onto the eigenvalues in the half-open interval (lo, hi].
Matrix spectral_projection(const HermitianOperator& a, double lo, double hi);

// (A - z)^{-1}; rejects real z.
Matrix resolvent(const HermitianOperator& a, cplx z);

}  // namespace opdiff::spectral
