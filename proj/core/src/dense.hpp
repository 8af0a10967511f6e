#pragma once

// Dense Hermitian eigensolver and singular values through LAPACK.

#include "opdiff/common.hpp"

namespace opdiff::detail {

// zheevd; eigenvalues ascending, eigenvectors in columns when `vectors` is non-null.
void hermitian_eigen(const Matrix& a, RealVector& values, Matrix* vectors);
RealVector hermitian_eigenvalues(const Matrix& a);

// zgesdd without vectors; descending.
RealVector singular_values(const Matrix& m);

}  // namespace opdiff::detail
