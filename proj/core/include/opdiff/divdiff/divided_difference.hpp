#pragma once

#include "opdiff/funcspace/sampled_function.hpp"

namespace opdiff::divdiff {

using funcspace::SampledFunction;
using funcspace::UniformGrid;

enum class DiagonalRule { derivative, symmetric_difference };

// Derivative when f carries one, symmetric difference otherwise.
DiagonalRule default_rule(const SampledFunction& f);

// Matrix entries f_check(x_m, x_n) * dx with f_check(x, y) = (f(x) - f(y)) / (x - y).
struct DividedDifferenceKernel {
  UniformGrid grid;
  DiagonalRule rule = DiagonalRule::derivative;
  Matrix matrix;
};

DividedDifferenceKernel divided_difference_kernel(const SampledFunction& f, const UniformGrid& grid,
                                                  DiagonalRule rule);

// ||f_check matrix|| / (2 pi).
double bmo_norm_via_kernel(const SampledFunction& f, const UniformGrid& grid);

}  // namespace opdiff::divdiff
