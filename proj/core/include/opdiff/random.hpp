#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "opdiff/common.hpp"

namespace opdiff {

// Philox4x64-10 counter-based generator (Salmon et al., Random123). The key is
// (seed, stream); each call to the block function consumes one 256-bit counter.
class Philox4x64 {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  Philox4x64(std::uint64_t seed, std::uint64_t stream);

  static Block block(Block counter, Key key);

  result_type operator()();
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  // Uniform on the open interval (0, 1) with 53-bit resolution.
  double uniform();
  // Standard normal via Box-Muller.
  double normal();
  // Complex Gaussian with independent N(0, 1/2) parts, so E|z|^2 = 1.
  cplx complex_normal();

 private:
  Key key_;
  Block counter_{};
  Block buffer_{};
  int used_ = 4;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stream identifier for trial `trial` of experiment `tag`.
std::uint64_t stream_id(const std::string& tag, std::uint64_t trial);

Matrix random_complex_gaussian(Philox4x64& rng, Eigen::Index rows, Eigen::Index cols);
// (X + X*)/2 with X complex Gaussian.
Matrix random_hermitian(Philox4x64& rng, Eigen::Index n);

}  // namespace opdiff
