#pragma once

#include <cstdint>

#include "opdiff/doi/quasi.hpp"
#include "opdiff/random.hpp"
#include "opdiff/spectral/pair.hpp"

namespace opdiff::lab {

// H0 random Hermitian with spectrum scaled into [-4, 4]; G0 complex Gaussian
// scaled by 1/sqrt(dim k_dim); G1 = S G0 with S a random diagonal sign matrix,
// so that G1* G0 is Hermitian; H1 = H0 + G1* G0.
spectral::OperatorPair ensemble(std::uint64_t seed, Eigen::Index dim, Eigen::Index k_dim, std::uint64_t stream = 0);

// Independent H0 (spectrum in [-4, 4]) and H1 (spectrum in [-3.5, 3.5]), independent G0, G1, and J solving H1 J - J H0 = G1* G0.
doi::QuasiPair quasi_ensemble(std::uint64_t seed, Eigen::Index dim, Eigen::Index k_dim, std::uint64_t stream = 0);

// Random Hermitian matrix rescaled so that its spectrum lies in [-radius, radius].
Matrix scaled_hermitian(Philox4x64& rng, Eigen::Index dim, double radius);

}  // namespace opdiff::lab
