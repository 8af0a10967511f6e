#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opdiff/common.hpp"

namespace opdiff::funcspace {

// Uniform grid x_i = x_min + i*step, i = 0..n-1, both endpoints included.
struct UniformGrid {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n = 2;

  UniformGrid() = default;
  UniformGrid(double lo, double hi, std::size_t count);

  double step() const { return (x_max - x_min) / static_cast<double>(n - 1); }
  double at(std::size_t i) const { return x_min + static_cast<double>(i) * step(); }
  RealVector nodes() const;
};

// A scalar function on the line, either as a closure or as grid samples.
class SampledFunction {
 public:
  using Closure = std::function<cplx(double)>;

  static SampledFunction analytic(Closure f, Closure derivative = nullptr, std::string name = {});
  static SampledFunction samples(UniformGrid grid, std::vector<cplx> values, std::string name = {});

  bool is_analytic() const { return static_cast<bool>(f_); }
  bool has_derivative() const { return static_cast<bool>(df_); }
  const std::string& name() const { return name_; }

  // Closure value, or the sample at a grid node; throws off-grid for samples.
  cplx operator()(double x) const;
  // f'(x) when a derivative closure is attached.
  std::optional<cplx> derivative(double x) const;

  // Values on a grid. Sampled functions require the grid to match their own.
  std::vector<cplx> sample(const UniformGrid& grid) const;

  const std::optional<UniformGrid>& grid() const { return grid_; }
  const std::vector<cplx>& values() const { return values_; }

  // Evaluates at x and throws NumericalRejection when the value is not finite.
  cplx checked(double x) const;

 private:
  Closure f_;
  Closure df_;
  std::optional<UniformGrid> grid_;
  std::vector<cplx> values_;
  std::string name_;
};

// Pointwise combinations of analytic functions.
SampledFunction operator+(const SampledFunction& a, const SampledFunction& b);
SampledFunction scale(const SampledFunction& a, cplx c);
SampledFunction shift(const SampledFunction& a, cplx c);
SampledFunction conj(const SampledFunction& a);
SampledFunction constant_function(cplx c);
SampledFunction identity_function();

}  // namespace opdiff::funcspace
