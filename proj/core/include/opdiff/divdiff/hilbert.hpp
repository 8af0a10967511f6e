#pragma once

#include <optional>

#include "opdiff/funcspace/sampled_function.hpp"

namespace opdiff::divdiff {

enum class HilbertVariant { periodic_multiplier, line_kernel, involution_projected };

struct DiscreteHilbertTransform {
  HilbertVariant variant = HilbertVariant::periodic_multiplier;
  std::optional<funcspace::UniformGrid> grid;
  Matrix matrix;
  // Orthonormal eigenbases for the +1 / -1 eigenspaces (involutive variants only).
  Matrix basis_plus;
  Matrix basis_minus;
};

// periodic_multiplier: DFT multiplier +1 for k >= 0, -1 for k < 0 (grid optional).
// line_kernel: (1/(pi i)) dx / (x_n - x_m) off the diagonal (grid required).
// involution_projected: spectral sign of the line kernel, 0 mapped to +1 (grid required).
DiscreteHilbertTransform hilbert_transform(HilbertVariant variant, std::size_t n,
                                           const std::optional<funcspace::UniformGrid>& grid = std::nullopt);

// Sign function of a Hermitian matrix (eigenvalue 0 mapped to +1).
Matrix spectral_sign(const Matrix& h);

struct HardyProjectionPair {
  Matrix p_plus;
  Matrix p_minus;
  Matrix q_plus;   // orthonormal basis of Ran P+
  Matrix q_minus;  // orthonormal basis of Ran P-
  HilbertVariant variant = HilbertVariant::periodic_multiplier;
};

// P_+- = (I +- J)/2; rejects J with ||J^2 - I|| > 1e-10.
HardyProjectionPair hardy_projections(const DiscreteHilbertTransform& j);

}  // namespace opdiff::divdiff
