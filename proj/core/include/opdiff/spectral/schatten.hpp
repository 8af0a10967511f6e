#pragma once

#include <limits>

#include "opdiff/common.hpp"

namespace opdiff::spectral {

// Exponent of a Schatten (quasi-)norm; infinity stands for the operator norm.
class SchattenIndex {
 public:
  SchattenIndex(double p);  // NOLINT: implicit on purpose, sweeps pass plain doubles
  static SchattenIndex infinity() { return SchattenIndex(std::numeric_limits<double>::infinity()); }

  double value() const { return p_; }
  bool is_infinite() const { return p_ == std::numeric_limits<double>::infinity(); }

 private:
  double p_;
};

// Singular values in descending order.
RealVector singular_values(const Matrix& m);

// (sum s_i^p)^(1/p), or s_1 for p = infinity.
double schatten_norm(const Matrix& m, SchattenIndex p);
double schatten_norm_from_values(const RealVector& s, SchattenIndex p);

// sum s_i^p over singular values above rel_cutoff * s_1 (finite p only).
double schatten_power_sum(const Matrix& m, double p, double rel_cutoff = 0.0);
double schatten_power_sum_from_values(const RealVector& s, double p, double rel_cutoff = 0.0);

// Number of singular values above rel_cutoff * s_1.
Eigen::Index numerical_rank(const Matrix& m, double rel_cutoff);

// Content hash of a matrix (shape and raw bytes).
std::uint64_t matrix_hash(const Matrix& m);

}  // namespace opdiff::spectral
