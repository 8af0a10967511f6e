#include "opdiff/funcspace/sampled_function.hpp"

#include <cmath>
#include <sstream>

namespace opdiff::funcspace {

UniformGrid::UniformGrid(double lo, double hi, std::size_t count) : x_min(lo), x_max(hi), n(count) {
  if (count < 2) throw InvalidInput("grid needs at least 2 points");
  if (!(lo < hi)) throw InvalidInput("grid needs x_min < x_max");
}

RealVector UniformGrid::nodes() const {
  RealVector x(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) x[static_cast<Eigen::Index>(i)] = at(i);
  return x;
}

SampledFunction SampledFunction::analytic(Closure f, Closure derivative, std::string name) {
  if (!f) throw InvalidInput("analytic function needs a closure");
  SampledFunction s;
  s.f_ = std::move(f);
  s.df_ = std::move(derivative);
  s.name_ = std::move(name);
  return s;
}

SampledFunction SampledFunction::samples(UniformGrid grid, std::vector<cplx> values, std::string name) {
  if (values.size() != grid.n) throw InvalidInput("sample count does not match grid size");
  SampledFunction s;
  s.grid_ = grid;
  s.values_ = std::move(values);
  s.name_ = std::move(name);
  return s;
}

cplx SampledFunction::operator()(double x) const {
  if (f_) return f_(x);
  const UniformGrid& g = *grid_;
  const double h = g.step();
  const double t = (x - g.x_min) / h;
  const long i = std::lround(t);
  if (i < 0 || i >= static_cast<long>(g.n) || std::abs(t - static_cast<double>(i)) > 1e-9) {
    std::ostringstream os;
    os << "sampled function '" << name_ << "' is not defined off its grid (x = " << x << ")";
    throw InvalidInput(os.str());
  }
  return values_[static_cast<std::size_t>(i)];
}

std::optional<cplx> SampledFunction::derivative(double x) const {
  if (!df_) return std::nullopt;
  return df_(x);
}

std::vector<cplx> SampledFunction::sample(const UniformGrid& grid) const {
  if (!f_) {
    const UniformGrid& g = *grid_;
    if (g.n != grid.n || std::abs(g.x_min - grid.x_min) > 1e-12 * (1 + std::abs(g.x_min)) ||
        std::abs(g.x_max - grid.x_max) > 1e-12 * (1 + std::abs(g.x_max)))
      throw InvalidInput("sampled function requested on a different grid");
    return values_;
  }
  std::vector<cplx> out(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) out[i] = f_(grid.at(i));
  return out;
}

cplx SampledFunction::checked(double x) const {
  const cplx v = (*this)(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os.precision(17);
    os << "function '" << name_ << "' is undefined at x = " << x;
    throw NumericalRejection(os.str());
  }
  return v;
}

namespace {

SampledFunction combine_samples(const SampledFunction& a, const SampledFunction& b,
                                const std::function<cplx(cplx, cplx)>& op) {
  if (a.is_analytic() || b.is_analytic()) throw InvalidInput("cannot mix analytic and sampled functions");
  std::vector<cplx> v = a.sample(*b.grid());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(v[i], b.values()[i]);
  return SampledFunction::samples(*a.grid(), std::move(v));
}

SampledFunction map_values(const SampledFunction& a, const std::function<cplx(cplx)>& op,
                           const std::function<cplx(cplx)>& dop, const std::string& name) {
  if (a.is_analytic()) {
    SampledFunction::Closure d;
    if (a.has_derivative() && dop) d = [a, dop](double x) { return dop(*a.derivative(x)); };
    return SampledFunction::analytic([a, op](double x) { return op(a(x)); }, d, name);
  }
  std::vector<cplx> v = a.values();
  for (auto& z : v) z = op(z);
  return SampledFunction::samples(*a.grid(), std::move(v), name);
}

}  // namespace

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) {
  if (a.is_analytic() && b.is_analytic()) {
    SampledFunction::Closure d;
    if (a.has_derivative() && b.has_derivative())
      d = [a, b](double x) { return *a.derivative(x) + *b.derivative(x); };
    return SampledFunction::analytic([a, b](double x) { return a(x) + b(x); }, d,
                                     a.name() + "+" + b.name());
  }
  return combine_samples(a, b, [](cplx u, cplx v) { return u + v; });
}

SampledFunction scale(const SampledFunction& a, cplx c) {
  return map_values(a, [c](cplx z) { return c * z; }, [c](cplx z) { return c * z; }, a.name());
}

SampledFunction shift(const SampledFunction& a, cplx c) {
  return map_values(a, [c](cplx z) { return z + c; }, [](cplx z) { return z; }, a.name());
}

SampledFunction conj(const SampledFunction& a) {
  return map_values(a, [](cplx z) { return std::conj(z); }, [](cplx z) { return std::conj(z); },
                    "conj(" + a.name() + ")");
}

SampledFunction constant_function(cplx c) {
  return SampledFunction::analytic([c](double) { return c; }, [](double) { return cplx{}; }, "const");
}

SampledFunction identity_function() {
  return SampledFunction::analytic([](double x) { return cplx{x, 0.0}; }, [](double) { return cplx{1.0, 0.0}; },
                                   "x");
}

}  // namespace opdiff::funcspace
