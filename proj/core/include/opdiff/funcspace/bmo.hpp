#pragma once

#include "opdiff/funcspace/sampled_function.hpp"

namespace opdiff::funcspace {

// max over dyadic index blocks of length >= 2 of the mean of |f - <f>_I|.
double bmo_mean_oscillation(const SampledFunction& f);

}  // namespace opdiff::funcspace
