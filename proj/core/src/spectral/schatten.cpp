#include "opdiff/spectral/schatten.hpp"

#include "dense.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

namespace opdiff::spectral {

SchattenIndex::SchattenIndex(double p) : p_(p) {
  if (!(p > 0.0)) throw InvalidInput("Schatten index must be positive");
}

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return RealVector();
  return detail::singular_values(m);
}

double schatten_norm_from_values(const RealVector& s, SchattenIndex p) {
  if (s.size() == 0) return 0.0;
  const double s1 = s.maxCoeff();
  if (s1 == 0.0) return 0.0;
  if (p.is_infinite()) return s1;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s[i] / s1, p.value());
  return s1 * std::pow(acc, 1.0 / p.value());
}

double schatten_norm(const Matrix& m, SchattenIndex p) {
  if (p.is_infinite() && m.size() > 0) {
    // Largest eigenvalue of the smaller Gram matrix; accurate relative to s_1^2.
    const Matrix gram = m.rows() <= m.cols() ? Matrix(m * m.adjoint()) : Matrix(m.adjoint() * m);
    return std::sqrt(std::max(0.0, detail::hermitian_eigenvalues(gram).maxCoeff()));
  }
  return schatten_norm_from_values(singular_values(m), p);
}

double schatten_power_sum_from_values(const RealVector& s, double p, double rel_cutoff) {
  if (s.size() == 0) return 0.0;
  const double cut = rel_cutoff * s.maxCoeff();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > cut) acc += std::pow(s[i], p);
  return acc;
}

double schatten_power_sum(const Matrix& m, double p, double rel_cutoff) {
  return schatten_power_sum_from_values(singular_values(m), p, rel_cutoff);
}

Eigen::Index numerical_rank(const Matrix& m, double rel_cutoff) {
  const RealVector s = singular_values(m);
  if (s.size() == 0 || s[0] == 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > rel_cutoff * s[0]) ++r;
  return r;
}

std::uint64_t matrix_hash(const Matrix& m) {
  std::string bytes(sizeof(Eigen::Index) * 2 + sizeof(cplx) * static_cast<std::size_t>(m.size()), '\0');
  const Eigen::Index shape[2] = {m.rows(), m.cols()};
  std::memcpy(bytes.data(), shape, sizeof shape);
  if (m.size() > 0) std::memcpy(bytes.data() + sizeof shape, m.data(), sizeof(cplx) * static_cast<std::size_t>(m.size()));
  return fnv1a64(bytes);
}

}  // namespace opdiff::spectral
