#include "dense.hpp"

#include <lapacke.h>

#include <string>

namespace opdiff::detail {

namespace {

lapack_complex_double* raw(Matrix& m) { return reinterpret_cast<lapack_complex_double*>(m.data()); }

}  // namespace

void hermitian_eigen(const Matrix& a, RealVector& values, Matrix* vectors) {
  const auto n = static_cast<lapack_int>(a.rows());
  Matrix work = a;
  values.resize(n);
  if (n == 0) {
    if (vectors) vectors->resize(0, 0);
    return;
  }
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n, raw(work), n, values.data());
  if (info != 0) throw NumericalRejection("zheevd failed with info " + std::to_string(info));
  if (vectors) *vectors = std::move(work);
}

RealVector hermitian_eigenvalues(const Matrix& a) {
  RealVector w;
  hermitian_eigen(a, w, nullptr);
  return w;
}

RealVector singular_values(const Matrix& m) {
  const auto rows = static_cast<lapack_int>(m.rows());
  const auto cols = static_cast<lapack_int>(m.cols());
  RealVector s(std::min(rows, cols));
  if (s.size() == 0) return s;
  Matrix work = m;
  const lapack_int info =
      LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', rows, cols, raw(work), rows, s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw NumericalRejection("zgesdd failed with info " + std::to_string(info));
  return s;
}

}  // namespace opdiff::detail
