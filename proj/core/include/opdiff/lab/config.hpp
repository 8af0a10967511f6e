#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opdiff/common.hpp"
#include "opdiff/funcspace/sampled_function.hpp"

namespace opdiff::lab {

enum class Experiment { verify, sweep, besov, bmo, sharpness, falpha, smoothness, interpolation };

std::string experiment_name(Experiment e);
Experiment parse_experiment(const std::string& name);

// Invalid configuration; the message starts with "<source>:<line>: <field>:" or "<field>:".
class ConfigError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct HolderTriple {
  double p = 1.0;
  double q = 2.0;
  double r = 2.0;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::verify;
  std::uint64_t seed = 42;
  std::vector<int> dims;
  std::optional<funcspace::UniformGrid> grid;
  std::vector<HolderTriple> triples;
  std::vector<std::string> functions;
  std::vector<double> p_values;
  std::vector<double> q_values;
  std::vector<double> alpha_values;
  std::string model;
  int trials = 0;
  double tol_disc = 0.1;
  std::optional<int> j_min;
  std::optional<int> j_max;
  std::string output;
  std::string format = "csv";

  // Fills every unset field with the experiment default.
  ExperimentConfig resolved() const;
  // Throws ConfigError naming the offending field.
  void validate() const;

  // Canonical JSON of every field except the output path; hash = FNV-1a of it.
  std::string canonical_json() const;
  std::string hash() const;
};

// Sets one field from its textual values. `where` prefixes diagnostics.
void apply_key(ExperimentConfig& cfg, const std::string& key, const std::vector<std::string>& values,
               const std::string& where = {});

// JSON when the first non-blank character is '{', otherwise TOML-style "key = value" lines
// with '#' comments, quoted strings and [a, b, ...] lists.
ExperimentConfig parse_config_text(const std::string& text, const std::string& source = "<config>");
ExperimentConfig load_config(const std::string& path);

// "p:q:r" with fractions ("2/3") and "inf" allowed.
HolderTriple parse_triple(const std::string& text);
// "x_min:x_max:N".
funcspace::UniformGrid parse_grid(const std::string& text);
// Number, fraction or "inf".
double parse_exponent(const std::string& text);

}  // namespace opdiff::lab
