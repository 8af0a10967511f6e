#pragma once

#include <string>

#include "opdiff/lab/config.hpp"
#include "opdiff/lab/record.hpp"

namespace opdiff::lab {

std::string version_string();

// Resolves defaults, validates (ConfigError on failure) and runs the experiment.
// Numerical rejections inside a check become failed rows.
ResultRecord run(const ExperimentConfig& config);

}  // namespace opdiff::lab
