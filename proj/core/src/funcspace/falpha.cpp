#include "opdiff/funcspace/falpha.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "opdiff/funcspace/dyadic.hpp"

namespace opdiff::funcspace {

FAlphaSpec FAlphaSpec::make(double alpha, cplx a_plus, cplx a_minus, double c) {
  FAlphaSpec s;
  s.alpha = alpha;
  s.a_plus = a_plus;
  s.a_minus = a_minus;
  s.c = c;
  const double d = c / 2.0;
  s.cutoff = [c, d](double x) { return 1.0 - smooth_step((std::abs(x) - d) / (c - d)); };
  s.cutoff_derivative = [c, d](double x) {
    const double sg = x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
    return -smooth_step_derivative((std::abs(x) - d) / (c - d)) * sg / (c - d);
  };
  s.validate();
  return s;
}

void FAlphaSpec::validate() const {
  if (!(c > 0.0 && c < 1.0)) throw InvalidInput("F_alpha cutoff radius must lie in (0, 1)");
  if (!cutoff) throw InvalidInput("F_alpha needs a cutoff");
  if (cutoff(0.0) != 1.0 || cutoff(1e-3 * c) != 1.0 || cutoff(-1e-3 * c) != 1.0)
    throw InvalidInput("F_alpha cutoff must equal 1 near 0");
  for (double x : {c, -c, 0.5 * (1.0 + c), -0.5 * (1.0 + c)})
    if (cutoff(x) != 0.0) throw InvalidInput("F_alpha cutoff must vanish outside (-c, c)");
}

cplx f_alpha_value(const FAlphaSpec& spec, double x) {
  if (x == 0.0 || std::abs(x) >= spec.c) return {};
  const double chi = spec.cutoff(x);
  if (chi == 0.0) return {};
  const double mag = chi * std::pow(-std::log(std::abs(x)), -spec.alpha);
  return (x > 0 ? spec.a_plus : spec.a_minus) * mag;
}

SampledFunction f_alpha_function(const FAlphaSpec& spec) {
  SampledFunction::Closure d;
  if (spec.cutoff_derivative) {
    d = [spec](double x) -> cplx {
      if (x == 0.0 || std::abs(x) >= spec.c) return {};
      const double l = -std::log(std::abs(x));
      const double g = std::pow(l, -spec.alpha);
      const double dg = spec.alpha * std::pow(l, -spec.alpha - 1.0) / x;
      const double val = spec.cutoff_derivative(x) * g + spec.cutoff(x) * dg;
      return (x > 0 ? spec.a_plus : spec.a_minus) * val;
    };
  }
  std::ostringstream name;
  name << "f_alpha(" << spec.alpha << ")";
  return SampledFunction::analytic([spec](double x) { return f_alpha_value(spec, x); }, d, name.str());
}

SampledFunction f_alpha_sample(const FAlphaSpec& spec, const UniformGrid& grid) {
  std::vector<cplx> v(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) v[i] = f_alpha_value(spec, grid.at(i));
  std::ostringstream name;
  name << "f_alpha(" << spec.alpha << ")";
  return SampledFunction::samples(grid, std::move(v), name.str());
}

FourierValue f_alpha_fourier(const FAlphaSpec& spec, double t) {
  using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  // G(x) = chi0(x) (-log x)^{-alpha} on (0, c); the x < 0 half is its mirror image.
  auto g = [&spec](double x) -> double {
    if (x <= 0.0 || x >= spec.c) return 0.0;
    const double chi = spec.cutoff(x);
    return chi == 0.0 ? 0.0 : chi * std::pow(-std::log(x), -spec.alpha);
  };
  const double at = std::abs(t);
  cplx plus{};  // int_0^c e^{-i|t|x} G(x) dx
  double err = 0.0;
  double l1 = 0.0;
  // Panels are smooth after the splitting below; a shallow depth bounds the work
  // where the cutoff makes the integrand tiny and a relative tolerance is unreachable.
  constexpr unsigned kDepth = 4;
  auto accumulate = [&](auto&& re_f, auto&& im_f) {
    double e_re = 0.0, e_im = 0.0, l_re = 0.0, l_im = 0.0;
    const double re = Quad::integrate(re_f, 0.0, 1.0, kDepth, 1e-12, &e_re, &l_re);
    const double im = Quad::integrate(im_f, 0.0, 1.0, kDepth, 1e-12, &e_im, &l_im);
    plus += cplx{re, im};
    err += e_re + e_im;
    l1 += l_re + l_im;
  };
  // Every panel is mapped onto [0, 1]: the adaptive rule compares its unit-interval
  // error with the scaled estimate, so short panels would otherwise never converge.
  auto direct = [&](double a, double b) {
    const double w = b - a;
    accumulate([&](double u) { const double x = a + w * u; return w * g(x) * std::cos(at * x); },
               [&](double u) { const double x = a + w * u; return -w * g(x) * std::sin(at * x); });
  };
  // Quarter periods: cos and sin keep one sign on each panel, so the relative
  // tolerance is never judged against a cancelled sum.
  const double h = at > 0 ? std::min(0.5 * kPi / at, spec.c) : spec.c;
  // The first panel holds the logarithmic singularity; split it geometrically
  // toward 0 until the remaining piece is below rounding (|G| <= 1 there).
  double hi = h;
  for (int k = 0; k < 200 && hi > 1e-17 * h; ++k) {
    direct(0.5 * hi, hi);
    hi *= 0.5;
  }
  if (at == 0.0) {
    if (h < spec.c) direct(h, spec.c);
  } else {
    // On panel k the phase is (pi/2)(k + u); rotating by quadrant avoids the
    // argument-reduction noise of cos(|t| x) at large |t| x.
    const auto panels = static_cast<long>(std::ceil(spec.c / h));
    for (long k = 1; k < panels; ++k) {
      const double a = static_cast<double>(k) * h;
      const double umax = std::min(1.0, (spec.c - a) / h);
      if (umax <= 0.0) break;
      const int quad = static_cast<int>(k % 4);
      auto rot = [quad](double u, bool want_sin) {
        const double c0 = std::cos(0.5 * kPi * u), s0 = std::sin(0.5 * kPi * u);
        const double c = quad == 0 ? c0 : quad == 1 ? -s0 : quad == 2 ? -c0 : s0;
        const double s = quad == 0 ? s0 : quad == 1 ? c0 : quad == 2 ? -s0 : -c0;
        return want_sin ? s : c;
      };
      const double w = h * umax;
      accumulate([&](double u) { return w * g(a + w * u) * rot(umax * u, false); },
                 [&](double u) { return -w * g(a + w * u) * rot(umax * u, true); });
    }
  }
  if (t < 0) plus = std::conj(plus);
  // The negative half contributes int_0^c e^{+itx} G(x) dx = conj(plus) since G is real.
  const cplx value = (spec.a_plus * plus + spec.a_minus * std::conj(plus)) / kTwoPi;
  const double scale = (std::abs(spec.a_plus) + std::abs(spec.a_minus)) / kTwoPi;
  const double total_err = err * scale;
  if (!std::isfinite(std::abs(value)) || total_err > 1e-2 * std::abs(value) + 1e-15 * (1.0 + l1 * scale)) {
    std::ostringstream os;
    os << "F_alpha transform quadrature did not converge at t = " << t << " (error estimate " << total_err << ")";
    throw NumericalRejection(os.str());
  }
  return {value, total_err};
}

cplx f_alpha_leading_term(const FAlphaSpec& spec, double t) {
  const double lt = std::log(std::abs(t));
  if (spec.a_plus != spec.a_minus) return (spec.a_plus - spec.a_minus) / (kTwoPi * kI * t) * std::pow(lt, -spec.alpha);
  return -spec.a_plus * spec.alpha / (2.0 * std::abs(t)) * std::pow(lt, -spec.alpha - 1.0);
}

std::vector<FourierAsymptoticRow> f_alpha_fourier_asymptotics(const FAlphaSpec& spec,
                                                              const std::vector<double>& t_values) {
  std::vector<FourierAsymptoticRow> rows;
  for (double t : t_values) {
    if (std::abs(t) < 1e2) throw InvalidInput("asymptotic table needs |t| >= 100");
    FourierAsymptoticRow r;
    r.t = t;
    const FourierValue fv = f_alpha_fourier(spec, t);
    r.value = fv.value;
    r.error = fv.error;
    r.leading = f_alpha_leading_term(spec, t);
    r.ratio = r.leading == cplx{} ? cplx{std::numeric_limits<double>::quiet_NaN(), 0.0} : r.value / r.leading;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace opdiff::funcspace
