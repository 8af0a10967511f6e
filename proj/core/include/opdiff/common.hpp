#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace opdiff {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Raised when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation cannot meet its stated accuracy.
class NumericalRejection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline const cplx kI{0.0, 1.0};

// Largest |a_ij| over all entries.
inline double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

// FNV-1a over a byte string; used for config and symbol hashes.
std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace opdiff
