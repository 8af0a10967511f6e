#include "opdiff/random.hpp"

#include <cmath>

namespace opdiff {

namespace {

constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

Philox4x64::Philox4x64(std::uint64_t seed, std::uint64_t stream) : key_{seed, stream} {}

Philox4x64::Block Philox4x64::block(Block x, Key k) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kW0;
      k[1] += kW1;
    }
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, x[0], hi0, lo0);
    mulhilo(kM1, x[2], hi1, lo1);
    x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
  }
  return x;
}

Philox4x64::result_type Philox4x64::operator()() {
  if (used_ == 4) {
    buffer_ = block(counter_, key_);
    for (auto& c : counter_)
      if (++c != 0) break;
    used_ = 0;
  }
  return buffer_[static_cast<std::size_t>(used_++)];
}

double Philox4x64::uniform() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

double Philox4x64::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

cplx Philox4x64::complex_normal() {
  const double a = normal();
  const double b = normal();
  return {a * M_SQRT1_2, b * M_SQRT1_2};
}

std::uint64_t stream_id(const std::string& tag, std::uint64_t trial) {
  return fnv1a64(tag + "#" + std::to_string(trial));
}

Matrix random_complex_gaussian(Philox4x64& rng, Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.complex_normal();
  return m;
}

Matrix random_hermitian(Philox4x64& rng, Eigen::Index n) {
  const Matrix x = random_complex_gaussian(rng, n, n);
  return 0.5 * (x + x.adjoint());
}

}  // namespace opdiff
