#include "opdiff/smoothness/interpolation.hpp"

#include <cmath>

namespace opdiff::smoothness {

AnalyticFamily::AnalyticFamily(MultOpModel base, double q) : base_(std::move(base)), q_(q) {
  if (!(q >= 2.0)) throw InvalidInput("interpolation family needs q >= 2");
  for (const auto& g : base_.blocks()) {
    Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& s = svd.singularValues();
    const double tol = 1e-13 * (s.size() ? s[0] : 0.0);
    Eigen::Index r = 0;
    while (r < s.size() && s[r] > tol && s[r] > 0.0) ++r;
    polar_.push_back({svd.matrixU().leftCols(r), s.head(r), svd.matrixV().leftCols(r)});
  }
}

std::vector<Matrix> AnalyticFamily::evaluate(cplx z) const {
  std::vector<Matrix> out;
  out.reserve(polar_.size());
  const cplx w = q_ * z / 2.0;
  for (const auto& p : polar_) {
    Vector d(p.s.size());
    // s^w = exp(w log s); zero singular directions were dropped, so 0^w = 0.
    for (Eigen::Index i = 0; i < p.s.size(); ++i) d[i] = std::exp(w * std::log(p.s[i]));
    out.push_back(p.u * d.asDiagonal() * p.v.adjoint());
  }
  return out;
}

double AnalyticFamily::reconstruction_residual() const {
  const auto g = evaluate(2.0 / q_);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    num = std::max(num, max_abs(g[k] - base_.block(k)));
    den = std::max(den, max_abs(base_.block(k)));
  }
  return den > 0 ? num / den : num;
}

double AnalyticFamily::unit_bound(const std::vector<double>& y_values) const {
  double m = 0.0;
  for (double y : y_values)
    for (const auto& g : evaluate(cplx{0.0, y})) m = std::max(m, spectral::schatten_norm(g, spectral::SchattenIndex::infinity()));
  return m;
}

double AnalyticFamily::endpoint_equality(const std::vector<double>& y_values) const {
  double m = 0.0;
  for (double y : y_values) {
    const auto g = evaluate(cplx{1.0, y});
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double target = std::pow(spectral::schatten_norm(base_.block(k), q_), q_);
      const double got = g[k].squaredNorm();
      if (target > 0) m = std::max(m, std::abs(got - target) / target);
      else m = std::max(m, got);
    }
  }
  return m;
}

double AnalyticFamily::strip_bound_ratio(const std::vector<cplx>& z_values) const {
  double m = 0.0;
  for (cplx z : z_values) {
    const auto g = evaluate(z);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double base = spectral::schatten_norm(base_.block(k), spectral::SchattenIndex::infinity());
      const double bound = std::max(1.0, std::pow(base, q_ / 2.0));
      m = std::max(m, spectral::schatten_norm(g[k], spectral::SchattenIndex::infinity()) / bound);
    }
  }
  return m;
}

AnalyticFamily interpolation_family(const MultOpModel& base, double q) { return AnalyticFamily(base, q); }

}  // namespace opdiff::smoothness
