#include "opdiff/smoothness/kato.hpp"

#include "dense.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "opdiff/parallel.hpp"

namespace opdiff::smoothness {

using spectral::SchattenIndex;

namespace {

// Schatten norm of a PSD matrix given through its eigenvalues, with exponent s = p/2.
double psd_norm(const Matrix& x, double s) {
  if (x.rows() == 1) return std::max(x(0, 0).real(), 0.0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(x, Eigen::EigenvaluesOnly);
  const RealVector mu = es.eigenvalues().cwiseMax(0.0);
  if (std::isinf(s)) return mu.maxCoeff();
  const double top = mu.maxCoeff();
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) acc += std::pow(mu[i] / top, s);
  return top * std::pow(acc, 1.0 / s);
}

// sup over [a, b] of value(sum_{i=a}^{b} g_i g_i^* dx) / ((b - a + 1) dx).
template <class Value>
IntervalSup interval_sup(const MultOpModel& model, Value value) {
  const std::size_t m = model.cells();
  const double dx = model.dx();
  std::vector<Matrix> outer(m);
  for (std::size_t i = 0; i < m; ++i) outer[i] = model.block(i) * model.block(i).adjoint() * dx;
  std::vector<IntervalSup> best(m);
  parallel_for(m, [&](std::size_t a) {
    Matrix acc = Matrix::Zero(model.k_dim(), model.k_dim());
    IntervalSup b{-1.0, a, a};
    for (std::size_t e = a; e < m; ++e) {
      acc += outer[e];
      const double v = value(acc) / (static_cast<double>(e - a + 1) * dx);
      if (v > b.value) b = {v, a, e};
    }
    best[a] = b;
  });
  IntervalSup out = best[0];
  for (std::size_t a = 1; a < m; ++a)
    if (best[a].value > out.value) out = best[a];
  return out;
}

// int_{x0}^{x1} dx / ((x - p)(x - q)) given lp = log(x1 - p) - log(x0 - p).
cplx pair_integral(cplx p, cplx q, cplx lp, cplx lq, double x0, double x1) {
  if (std::abs(p - q) <= 1e-13 * (1.0 + std::abs(p))) return 1.0 / (x0 - p) - 1.0 / (x1 - p);
  return (lp - lq) / (p - q);
}

struct FormResult {
  double c1 = 0.0;
  double c2 = 0.0;
};

// Top eigenvalues of the b1 and b2 forms at one eps. `points` are distinct spectral
// points; `owner[n]` maps each column of the Gram matrix to its point.
FormResult assemble_forms(const RealVector& points, const std::vector<Eigen::Index>& owner, const Matrix& gram,
                          double eps, double x0, double x1) {
  const Eigen::Index np = points.size();
  std::vector<cplx> lu(static_cast<std::size_t>(np)), ld(static_cast<std::size_t>(np));
  for (Eigen::Index i = 0; i < np; ++i) {
    const cplx up{points[i], eps}, dn{points[i], -eps};
    lu[static_cast<std::size_t>(i)] = std::log(x1 - up) - std::log(x0 - up);
    ld[static_cast<std::size_t>(i)] = std::log(x1 - dn) - std::log(x0 - dn);
  }
  RealMatrix k1(np, np), k2(np, np);
  const double c = 1.0 / (4.0 * kPi * kPi);
  for (Eigen::Index i = 0; i < np; ++i) {
    for (Eigen::Index j = 0; j < np; ++j) {
      const cplx ai{points[i], eps}, bi{points[i], -eps};
      const cplx aj{points[j], eps}, bj{points[j], -eps};
      const auto ui = lu[static_cast<std::size_t>(i)], di = ld[static_cast<std::size_t>(i)];
      const auto uj = lu[static_cast<std::size_t>(j)], dj = ld[static_cast<std::size_t>(j)];
      // b1: 2 Re int dx / ((x - (a + i eps)) (x - (b - i eps))), times (2 pi)^{-2}.
      k1(i, j) = 2.0 * c * pair_integral(ai, bj, ui, dj, x0, x1).real();
      // b2: (eps/pi)^2 int dx / (((x-a)^2 + eps^2)((x-b)^2 + eps^2)) via partial fractions.
      const cplx s = pair_integral(ai, aj, ui, uj, x0, x1) - pair_integral(ai, bj, ui, dj, x0, x1) -
                     pair_integral(bi, aj, di, uj, x0, x1) + pair_integral(bi, bj, di, dj, x0, x1);
      k2(i, j) = -c * s.real();
    }
  }
  const Eigen::Index d = gram.rows();
  Matrix q1(d, d), q2(d, d);
  for (Eigen::Index n = 0; n < d; ++n) {
    for (Eigen::Index m = 0; m < d; ++m) {
      q1(n, m) = gram(n, m) * k1(owner[static_cast<std::size_t>(n)], owner[static_cast<std::size_t>(m)]);
      q2(n, m) = gram(n, m) * k2(owner[static_cast<std::size_t>(n)], owner[static_cast<std::size_t>(m)]);
    }
  }
  FormResult r;
  r.c1 = std::max(0.0, detail::hermitian_eigenvalues(q1).maxCoeff());
  r.c2 = std::max(0.0, detail::hermitian_eigenvalues(q2).maxCoeff());
  return r;
}

ResolventNormEstimate resolvent_forms(const RealVector& points, const std::vector<Eigen::Index>& owner,
                                      const Matrix& columns, const std::vector<double>& eps_grid,
                                      std::pair<double, double> window) {
  if (eps_grid.empty()) throw InvalidInput("resolvent estimate needs a non-empty eps grid");
  for (double e : eps_grid)
    if (!(e > 0.0)) throw InvalidInput("eps values must be positive");
  const auto [x0, x1] = window;
  if (!(x0 < x1)) throw InvalidInput("window needs x0 < x1");

  ResolventNormEstimate r;
  r.window = window;
  r.eps_grid = eps_grid;
  for (double eps : eps_grid) {
    for (Eigen::Index i = 0; i < points.size(); ++i) {
      const double inside = (std::atan((x1 - points[i]) / eps) - std::atan((x0 - points[i]) / eps)) / kPi;
      r.tail_fraction = std::max(r.tail_fraction, 1.0 - inside);
    }
  }
  if (r.tail_fraction > 0.01) {
    std::ostringstream os;
    os << "x-window [" << x0 << ", " << x1 << "] too small: boundary tail mass " << r.tail_fraction << " exceeds 1%";
    throw NumericalRejection(os.str());
  }
  const Matrix gram = columns.adjoint() * columns;
  r.c1_by_eps.resize(eps_grid.size());
  r.c2_by_eps.resize(eps_grid.size());
  parallel_for(eps_grid.size(), [&](std::size_t e) {
    const FormResult f = assemble_forms(points, owner, gram, eps_grid[e], x0, x1);
    r.c1_by_eps[e] = f.c1;
    r.c2_by_eps[e] = f.c2;
  });
  for (std::size_t e = 0; e < eps_grid.size(); ++e) {
    if (r.c1_by_eps[e] > r.c1) {
      r.c1 = r.c1_by_eps[e];
      r.eps_c1 = eps_grid[e];
    }
    if (r.c2_by_eps[e] > r.c2) {
      r.c2 = r.c2_by_eps[e];
      r.eps_c2 = eps_grid[e];
    }
  }
  r.c1_error = r.tail_fraction * r.c1;
  r.c2_error = r.tail_fraction * r.c2;
  return r;
}

}  // namespace

IntervalSup kato_norm_interval(const MultOpModel& model) {
  IntervalSup s = interval_sup(model, [](const Matrix& x) { return psd_norm(x, std::numeric_limits<double>::infinity()); });
  s.value = std::sqrt(std::max(s.value, 0.0));
  return s;
}

double interval_schatten(const MultOpModel& model, std::size_t first, std::size_t last, SchattenIndex p) {
  if (first > last || last >= model.cells()) throw InvalidInput("cell range out of bounds");
  Matrix acc = Matrix::Zero(model.k_dim(), model.k_dim());
  for (std::size_t i = first; i <= last; ++i) acc += model.block(i) * model.block(i).adjoint() * model.dx();
  return std::sqrt(psd_norm(acc, p.value() / 2.0));
}

std::vector<double> default_eps_grid(const MultOpModel& model, int count) {
  if (count < 1) throw InvalidInput("eps grid needs at least one value");
  const double lo = model.dx();
  const double hi = (model.x_max() - model.x_min()) / 10.0;
  std::vector<double> g;
  if (count == 1 || hi <= lo) return {lo};
  for (int i = 0; i < count; ++i) g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return g;
}

ResolventNormEstimate kato_norm_resolvent(const MultOpModel& model, const ResolventOptions& opts) {
  std::vector<double> eps = opts.eps_grid.empty() ? default_eps_grid(model) : opts.eps_grid;
  for (double e : eps)
    if (e < model.dx() * (1.0 - 1e-12)) throw InvalidInput("eps below the resolution floor dx");
  const double emax = *std::max_element(eps.begin(), eps.end());
  const auto window = opts.window.value_or(std::make_pair(model.x_min() - 100.0 * emax, model.x_max() + 100.0 * emax));
  RealVector points(static_cast<Eigen::Index>(model.cells()));
  std::vector<Eigen::Index> owner;
  for (std::size_t i = 0; i < model.cells(); ++i) {
    points[static_cast<Eigen::Index>(i)] = model.midpoint(i);
    for (Eigen::Index a = 0; a < model.h_dim(); ++a) owner.push_back(static_cast<Eigen::Index>(i));
  }
  return resolvent_forms(points, owner, model.g_operator(), eps, window);
}

ResolventNormEstimate kato_norm_resolvent(const spectral::HermitianOperator& h, const Matrix& g,
                                          const ResolventOptions& opts) {
  if (g.cols() != h.dim()) throw InvalidInput("G must map from the space H acts on");
  if (opts.eps_grid.empty()) throw InvalidInput("general resolvent estimate needs an explicit eps grid");
  const RealVector& w = h.eigenvalues();
  const double emax = *std::max_element(opts.eps_grid.begin(), opts.eps_grid.end());
  const auto window = opts.window.value_or(std::make_pair(w.minCoeff() - 100.0 * emax, w.maxCoeff() + 100.0 * emax));
  std::vector<Eigen::Index> owner(static_cast<std::size_t>(w.size()));
  for (Eigen::Index i = 0; i < w.size(); ++i) owner[static_cast<std::size_t>(i)] = i;
  return resolvent_forms(w, owner, g * h.eigenvectors(), opts.eps_grid, window);
}

SmoothPNorm smooth_p_norm(const MultOpModel& model, SchattenIndex p) {
  const double s = p.value() / 2.0;
  IntervalSup sup = interval_sup(model, [s](const Matrix& x) { return psd_norm(x, s); });
  SmoothPNorm r;
  r.value = std::sqrt(std::max(sup.value, 0.0));
  r.lower_bound_only = p.value() < 2.0;
  r.first = sup.first;
  r.last = sup.last;
  return r;
}

SmoothPBound smooth_p_norm_definition(const MultOpModel& model, SchattenIndex p) {
  const std::size_t m = model.cells();
  std::vector<Matrix> a(m);
  for (std::size_t i = 0; i < m; ++i) a[i] = model.block(i) * model.block(i).adjoint();
  SmoothPBound r;
  if (p.value() >= 2.0) {
    // The squared norm is convex in the weights, so the sup sits at a single cell.
    double best = 0.0;
    for (const auto& x : a) best = std::max(best, psd_norm(x, p.value() / 2.0));
    r.lower = r.upper = std::sqrt(best);
    return r;
  }
  const double s = p.value() / 2.0;
  const Eigen::Index k = model.k_dim();
  std::vector<double> w(m, 1.0 / static_cast<double>(m));

  // F(w) = ||X||_s and its gradient Tr(X^{s-1} A_i) (sum mu^s)^{1/s - 1}.
  auto evaluate = [&](const std::vector<double>& wt, std::vector<double>* grad) {
    Matrix x = Matrix::Zero(k, k);
    for (std::size_t i = 0; i < m; ++i) x += wt[i] * a[i];
    Eigen::SelfAdjointEigenSolver<Matrix> es(x);
    const RealVector mu = es.eigenvalues().cwiseMax(0.0);
    const double top = mu.maxCoeff();
    if (top == 0.0) {
      if (grad) grad->assign(m, 0.0);
      return 0.0;
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < mu.size(); ++i) sum += std::pow(mu[i], s);
    const double f = std::pow(sum, 1.0 / s);
    if (grad) {
      RealVector pw(mu.size());
      for (Eigen::Index i = 0; i < mu.size(); ++i) pw[i] = mu[i] > 1e-14 * top ? std::pow(mu[i], s - 1.0) : 0.0;
      const Matrix xs = es.eigenvectors() * pw.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
      const double pre = std::pow(sum, 1.0 / s - 1.0);
      grad->resize(m);
      for (std::size_t i = 0; i < m; ++i) (*grad)[i] = pre * (xs.cwiseProduct(a[i].transpose())).sum().real();
    }
    return f;
  };

  std::vector<double> grad, trial(m);
  double f = evaluate(w, &grad);
  double eta = 1.0;
  int it = 0;
  for (; it < 5000 && f > 0.0; ++it) {
    const double gmax = *std::max_element(grad.begin(), grad.end());
    if (gmax - f <= 1e-10 * f) break;
    // Exponentiated-gradient step with backtracking on the objective.
    double fnew = -1.0;
    for (int tries = 0; tries < 60; ++tries) {
      double norm = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        trial[i] = w[i] * std::exp(eta * (grad[i] - gmax) / f);
        norm += trial[i];
      }
      for (auto& t : trial) t /= norm;
      fnew = evaluate(trial, nullptr);
      if (fnew >= f) break;
      eta *= 0.5;
    }
    if (fnew < f) break;
    w = trial;
    f = evaluate(w, &grad);
    eta *= 1.5;
  }
  const double gmax = grad.empty() ? 0.0 : *std::max_element(grad.begin(), grad.end());
  r.lower = std::sqrt(f);
  r.upper = std::sqrt(std::max(f, gmax));
  r.iterations = it;
  return r;
}

BesselReport bessel_property_check(const MultOpModel& model, const Vector& u, const Matrix& psi) {
  const std::size_t m = model.cells();
  const Eigen::Index h = model.h_dim();
  if (u.size() != h * static_cast<Eigen::Index>(m)) throw InvalidInput("u has the wrong length");
  if (psi.rows() != static_cast<Eigen::Index>(m)) throw InvalidInput("psi needs one row per cell");
  const double dx = model.dx();
  BesselReport r;
  const Matrix gram = dx * psi.adjoint() * psi;
  r.gram_defect = max_abs(gram - Matrix::Identity(psi.cols(), psi.cols()));
  if (r.gram_defect > 1e-10) {
    std::ostringstream os;
    os << "psi family is not orthonormal: Gram defect " << r.gram_defect;
    throw InvalidInput(os.str());
  }
  for (Eigen::Index n = 0; n < psi.cols(); ++n) {
    Vector acc = Vector::Zero(model.k_dim());
    for (std::size_t i = 0; i < m; ++i)
      acc += model.block(i) * u.segment(static_cast<Eigen::Index>(i) * h, h) * (psi(static_cast<Eigen::Index>(i), n) * dx);
    r.lhs += acc.squaredNorm();
  }
  const double c = kato_norm_interval(model).value;
  r.rhs = c * c * u.squaredNorm() * dx;
  r.pass = r.lhs <= r.rhs * (1.0 + 1e-9);
  return r;
}

SmoothNormReport smoothness_report(const MultOpModel& model, const std::vector<double>& p_values,
                                   const ResolventOptions& opts) {
  SmoothNormReport r;
  r.norm_b3 = kato_norm_interval(model).value;
  r.c3 = r.norm_b3 * r.norm_b3;
  const ResolventNormEstimate e = kato_norm_resolvent(model, opts);
  r.c1 = e.c1;
  r.c2 = e.c2;
  r.c1_error = e.c1_error;
  r.c2_error = e.c2_error;
  r.eps_grid = e.eps_grid;
  r.window = e.window;
  for (double p : p_values) r.p_norms[p] = smooth_p_norm(model, p).value;
  return r;
}

}  // namespace opdiff::smoothness
