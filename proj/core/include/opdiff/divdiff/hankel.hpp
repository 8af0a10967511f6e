#pragma once

#include <vector>

#include "opdiff/divdiff/divided_difference.hpp"
#include "opdiff/divdiff/hilbert.hpp"
#include "opdiff/funcspace/dyadic.hpp"

namespace opdiff::divdiff {

// Compressions of multiplication by f between the Hardy subspaces.
struct HankelBlock {
  Matrix a_block;  // Q+* M_f Q-
  Matrix b_block;  // Q-* M_f Q+, the Hankel operator H(f)
};

HankelBlock hankel_blocks(const std::vector<cplx>& f_values, const HardyProjectionPair& proj);

// Singular values below this multiple of the largest one are treated as zero.
inline constexpr double kHankelRankCutoff = 1e-11;

struct HankelIdentityReport {
  double p = 0.0;
  double lhs = 0.0;  // ||P+ f P- - P- f P+||_p^p
  double rhs = 0.0;  // ||H(f)||_p^p + ||H(conj f)||_p^p
  double residual = 0.0;
  double grid_lhs = 0.0;            // (2 pi)^{-p} ||f_check grid matrix||_p^p
  double discretization_gap = 0.0;  // |grid_lhs - lhs| / lhs
  double cutoff = 0.0;              // absolute singular value cutoff used
  double smallest_kept = 0.0;
  double largest_dropped = 0.0;
};

// Periodic model only: the commutator form of f_check is exact there.
HankelIdentityReport hankel_schatten_identity_check(const funcspace::SampledFunction& f,
                                                    const HardyProjectionPair& proj, const funcspace::UniformGrid& grid,
                                                    double p);

struct PellerReport {
  double hankel_side = 0.0;  // (||H(f)||_p^p + ||H(conj f)||_p^p)^{1/p}
  double besov = 0.0;
  double ratio = 0.0;  // NaN when the Besov norm vanishes
};

// Periodic Hankel model on the grid versus the dyadic Besov functional of the samples.
PellerReport peller_two_sided_check(const funcspace::SampledFunction& f, double p,
                                    const funcspace::DyadicWindow& window, const funcspace::UniformGrid& grid);

}  // namespace opdiff::divdiff
