#pragma once

#include <limits>
#include <string>

#include "opdiff/random.hpp"

namespace testing_support {

using opdiff::Matrix;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline opdiff::Philox4x64 rng_for(const std::string& tag, std::uint64_t trial = 0) {
  return opdiff::Philox4x64(20261016, opdiff::stream_id(tag, trial));
}

inline Matrix random_matrix(const std::string& tag, Eigen::Index rows, Eigen::Index cols, std::uint64_t trial = 0) {
  auto rng = rng_for(tag, trial);
  return opdiff::random_complex_gaussian(rng, rows, cols);
}

inline Matrix random_herm(const std::string& tag, Eigen::Index n, std::uint64_t trial = 0) {
  auto rng = rng_for(tag, trial);
  return opdiff::random_hermitian(rng, n);
}

}  // namespace testing_support
