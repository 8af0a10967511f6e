#include "opdiff/funcspace/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace opdiff::funcspace {

RationalFunction RationalFunction::partial_fractions(cplx constant, std::vector<PoleTerm> terms) {
  for (const auto& t : terms) {
    if (t.pole.imag() == 0.0) {
      std::ostringstream os;
      os << "rational function has a real pole at " << t.pole.real();
      throw InvalidInput(os.str());
    }
    if (t.coeffs.empty()) throw InvalidInput("pole term needs at least one coefficient");
  }
  RationalFunction r;
  r.constant_ = constant;
  r.terms_ = std::move(terms);
  return r;
}

RationalFunction RationalFunction::cayley_series(std::vector<cplx> coeffs, int order) {
  if (order < 0 || coeffs.size() != static_cast<std::size_t>(2 * order + 1))
    throw InvalidInput("Cayley series needs 2*order+1 coefficients");
  RationalFunction r;
  r.series_ = std::move(coeffs);
  r.order_ = order;
  return r;
}

cplx RationalFunction::operator()(double x) const {
  if (order_ >= 0) {
    const cplx z = line_to_circle(x);
    const cplx zi = std::conj(z);  // |z| = 1 on the line
    cplx acc = series_[static_cast<std::size_t>(order_)];
    cplx zp = 1.0, zm = 1.0;
    for (int j = 1; j <= order_; ++j) {
      zp *= z;
      zm *= zi;
      acc += series_[static_cast<std::size_t>(order_ + j)] * zp + series_[static_cast<std::size_t>(order_ - j)] * zm;
    }
    return acc;
  }
  cplx acc = constant_;
  for (const auto& t : terms_) {
    const cplx u = 1.0 / (x - t.pole);
    cplx up = u;
    for (const cplx& c : t.coeffs) {
      acc += c * up;
      up *= u;
    }
  }
  return acc;
}

cplx RationalFunction::derivative(double x) const {
  if (order_ >= 0) {
    const cplx z = line_to_circle(x);
    const cplx zi = std::conj(z);
    const cplx dz = 2.0 * kI / ((x + kI) * (x + kI));
    cplx acc{};
    cplx zp = 1.0, zm = zi;  // z^{j-1}, z^{-j-1}
    for (int j = 1; j <= order_; ++j) {
      acc += series_[static_cast<std::size_t>(order_ + j)] * static_cast<double>(j) * zp * dz;
      acc -= series_[static_cast<std::size_t>(order_ - j)] * static_cast<double>(j) * zm * dz;
      zp *= z;
      zm *= zi;
    }
    return acc;
  }
  cplx acc{};
  for (const auto& t : terms_) {
    const cplx u = 1.0 / (x - t.pole);
    cplx up = u * u;
    for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
      acc -= static_cast<double>(k + 1) * t.coeffs[k] * up;
      up *= u;
    }
  }
  return acc;
}

std::vector<std::pair<cplx, int>> RationalFunction::poles() const {
  std::vector<std::pair<cplx, int>> out;
  if (order_ >= 0) {
    int up = 0, down = 0;
    for (int j = 1; j <= order_; ++j) {
      if (series_[static_cast<std::size_t>(order_ + j)] != cplx{}) down = j;
      if (series_[static_cast<std::size_t>(order_ - j)] != cplx{}) up = j;
    }
    if (down > 0) out.emplace_back(-kI, down);
    if (up > 0) out.emplace_back(kI, up);
    return out;
  }
  for (const auto& t : terms_) {
    int m = 0;
    for (std::size_t k = 0; k < t.coeffs.size(); ++k)
      if (t.coeffs[k] != cplx{}) m = static_cast<int>(k + 1);
    if (m == 0) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == t.pole; });
    if (it == out.end())
      out.emplace_back(t.pole, m);
    else
      it->second = std::max(it->second, m);
  }
  return out;
}

int RationalFunction::total_multiplicity() const {
  int m = 0;
  for (const auto& p : poles()) m += p.second;
  return m;
}

SampledFunction RationalFunction::as_function(std::string name) const {
  RationalFunction self = *this;
  return SampledFunction::analytic([self](double x) { return self(x); }, [self](double x) { return self.derivative(x); },
                                   std::move(name));
}

cplx circle_to_line(cplx zeta) { return kI * (1.0 + zeta) / (1.0 - zeta); }

cplx line_to_circle(cplx x) { return (x - kI) / (x + kI); }

std::vector<cplx> fejer_mean(const std::vector<cplx>& coeffs, int m, int n) {
  if (n < 1) throw InvalidInput("Fejer order must be >= 1");
  if (coeffs.size() != static_cast<std::size_t>(2 * m + 1)) throw InvalidInput("coefficient vector size mismatch");
  std::vector<cplx> out(coeffs.size());
  for (int j = -m; j <= m; ++j) {
    const int aj = std::abs(j);
    const double w = aj >= n ? 0.0 : 1.0 - static_cast<double>(aj) / n;
    out[static_cast<std::size_t>(j + m)] = w * coeffs[static_cast<std::size_t>(j + m)];
  }
  return out;
}

RationalFunction fejer_rational_approx(const SampledFunction& f, int n, int quadrature_points) {
  if (n < 1) throw InvalidInput("Fejer order must be >= 1");
  if (!f.is_analytic()) throw InvalidInput("Fejer transfer needs a function evaluable on the whole line");

  // Crude growth check against C (1 + log(1 + x^2)).
  double c_small = 1e-300;
  for (double x = -10.125; x <= 10.0; x += 0.25) {
    const double r = std::abs(f(x)) / (1.0 + std::log1p(x * x));
    if (std::isfinite(r)) c_small = std::max(c_small, r);
  }
  for (double ax = 16.0; ax <= 1e8; ax *= 2.0) {
    for (double x : {ax, -ax}) {
      const double r = std::abs(f(x)) / (1.0 + std::log1p(x * x));
      if (!std::isfinite(r) || r > 100.0 * c_small) {
        std::ostringstream os;
        os << "f grows faster than logarithmically (|f(" << x << ")| = " << std::abs(f(x)) << ")";
        throw InvalidInput(os.str());
      }
    }
  }

  const int m = quadrature_points > 0 ? quadrature_points : std::max(16 * n, 4096);
  std::vector<cplx> h(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double theta = kTwoPi * (k + 0.5) / m;
    // omega(e^{i theta}) = -cot(theta / 2)
    h[static_cast<std::size_t>(k)] = f(-1.0 / std::tan(theta / 2.0));
  }
  const int order = n - 1;
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * order + 1));
  for (int j = -order; j <= order; ++j) {
    cplx acc{};
    for (int k = 0; k < m; ++k) {
      const double theta = kTwoPi * (k + 0.5) / m;
      acc += h[static_cast<std::size_t>(k)] * std::polar(1.0, -j * theta);
    }
    coeffs[static_cast<std::size_t>(j + order)] = acc / static_cast<double>(m);
  }
  return RationalFunction::cayley_series(fejer_mean(coeffs, order, n), order);
}

}  // namespace opdiff::funcspace
