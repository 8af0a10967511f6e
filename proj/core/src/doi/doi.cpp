#include "opdiff/doi/doi.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "opdiff/smoothness/kato.hpp"
#include "opdiff/spectral/schatten.hpp"

namespace opdiff::doi {

SchurSymbol SchurSymbol::constant(cplx c) {
  SchurSymbol s;
  s.kind_ = SymbolKind::constant;
  s.eval_ = [c](double, double) { return c; };
  std::ostringstream os;
  os.precision(17);
  os << "const(" << c << ")";
  s.name_ = os.str();
  return s;
}

SchurSymbol SchurSymbol::kernel(Kernel k, std::string name) {
  if (!k) throw InvalidInput("symbol needs a kernel closure");
  SchurSymbol s;
  s.kind_ = SymbolKind::kernel;
  s.eval_ = std::move(k);
  s.name_ = std::move(name);
  return s;
}

SchurSymbol SchurSymbol::divided_difference(SampledFunction f, DiagonalRule rule, double step) {
  if (rule == DiagonalRule::derivative && !f.has_derivative())
    throw InvalidInput("derivative diagonal rule needs a derivative closure");
  SchurSymbol s;
  s.kind_ = SymbolKind::divided_difference;
  s.name_ = "divdiff(" + f.name() + (rule == DiagonalRule::derivative ? ";derivative)" : ";symdiff)");
  s.eval_ = [f = std::move(f), rule, step](double x, double y) -> cplx {
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    const double gap = std::abs(x - y);
    if (rule == DiagonalRule::derivative) {
      if (gap <= kCoincidenceDerivative * scale) return *f.derivative(0.5 * (x + y));
    } else if (gap <= kCoincidenceExact * scale) {
      const double m = 0.5 * (x + y);
      return (f(m + step) - f(m - step)) / (2.0 * step);
    }
    return (f(x) - f(y)) / (x - y);
  };
  return s;
}

std::uint64_t SchurSymbol::hash() const { return fnv1a64(name_); }

cplx SchurSymbol::operator()(double x, double y) const {
  const cplx v = eval_(x, y);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os.precision(17);
    os << "symbol " << name_ << " undefined at spectral pair (" << x << ", " << y << ")";
    throw NumericalRejection(os.str());
  }
  return v;
}

SchurSymbol SchurSymbol::adjoint() const {
  SchurSymbol s;
  s.kind_ = kind_;
  s.name_ = "adj(" + name_ + ")";
  s.eval_ = [e = eval_](double x, double y) { return std::conj(e(y, x)); };
  return s;
}

DoiResult doi_apply(const HermitianOperator& h0, const HermitianOperator& h1, const Matrix& g0, const Matrix& g1,
                    const SchurSymbol& symbol) {
  if (g0.cols() != h0.dim() || g1.cols() != h1.dim() || g0.rows() != g1.rows())
    throw InvalidInput("factor shapes do not match the operator pair");
  const RealVector& l1 = h1.eigenvalues();
  const RealVector& l0 = h0.eigenvalues();
  const Matrix& v1 = h1.eigenvectors();
  const Matrix& v0 = h0.eigenvectors();
  Matrix core = (g1 * v1).adjoint() * (g0 * v0);
  for (Eigen::Index j = 0; j < core.cols(); ++j)
    for (Eigen::Index i = 0; i < core.rows(); ++i) core(i, j) *= symbol(l1[i], l0[j]);
  DoiResult r;
  r.matrix = v1 * core * v0.adjoint();
  r.symbol_hash = symbol.hash();
  std::uint64_t h = spectral::matrix_hash(h0.entries());
  h = h * 0x100000001b3ULL ^ spectral::matrix_hash(h1.entries());
  h = h * 0x100000001b3ULL ^ spectral::matrix_hash(g0);
  r.pair_hash = h * 0x100000001b3ULL ^ spectral::matrix_hash(g1);
  return r;
}

DoiResult doi_apply(const OperatorPair& pair, const SchurSymbol& symbol) {
  DoiResult r = doi_apply(pair.h0(), pair.h1(), pair.factor().g0, pair.factor().g1, symbol);
  r.pair_hash = pair.hash();
  return r;
}

double relative_residual(const Matrix& reference, const Matrix& candidate) {
  return (reference - candidate).norm() / std::max(reference.norm(), kEpsFloor);
}

BirmanSolomyakReport birman_solomyak_residual(const OperatorPair& pair, const SampledFunction& f, DiagonalRule rule) {
  const Matrix d = spectral::func_calculus(pair.h1(), f) - spectral::func_calculus(pair.h0(), f);
  const Matrix doi = doi_apply(pair, SchurSymbol::divided_difference(f, rule)).matrix;
  return {relative_residual(d, doi), d.norm(), doi.norm()};
}

SurrogatePair::SurrogatePair(smoothness::MultOpModel m0, smoothness::MultOpModel m1)
    : g0(std::move(m0)), g1(std::move(m1)) {
  if (g0.cells() != g1.cells() || g0.x_min() != g1.x_min() || g0.x_max() != g1.x_max() ||
      g0.h_dim() != g1.h_dim() || g0.k_dim() != g1.k_dim())
    throw InvalidInput("surrogate models must share cells and block shapes");
}

Matrix symbol_matrix(const smoothness::MultOpModel& model, const SchurSymbol& symbol) {
  const Eigen::Index m = static_cast<Eigen::Index>(model.cells());
  Matrix a(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      a(i, j) = symbol(model.midpoint(static_cast<std::size_t>(i)), model.midpoint(static_cast<std::size_t>(j))) *
                model.dx();
  return a;
}

void check_holder_triple(double p, double q, double r) {
  if (!(p > 0 && q > 0 && r > 0)) throw InvalidInput("Hoelder exponents must be positive");
  const double lhs = 1.0 / p;
  const double rhs = (std::isinf(q) ? 0.0 : 1.0 / q) + (std::isinf(r) ? 0.0 : 1.0 / r);
  if (std::abs(lhs - rhs) > 1e-12) {
    std::ostringstream os;
    os << "Hoelder violation: 1/p = " << lhs << " but 1/q + 1/r = " << rhs << " for (p, q, r) = (" << p << ", " << q
       << ", " << r << ")";
    throw InvalidInput(os.str());
  }
}

DoiBoundReport doi_norm_bound_check(const SurrogatePair& pair, const SchurSymbol& symbol, double p, double q, double r,
                                    double tol_disc) {
  check_holder_triple(p, q, r);
  DoiBoundReport rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  rep.tol_disc = tol_disc;
  const HermitianOperator h = pair.h();
  const Matrix d = doi_apply(h, h, pair.g0.g_operator(), pair.g1.g_operator(), symbol).matrix;
  rep.lhs = spectral::schatten_norm(d, p);
  rep.symbol_norm = spectral::schatten_norm(symbol_matrix(pair.g0, symbol), p);
  rep.smooth_q = smoothness::smooth_p_norm_definition(pair.g0, q).upper;
  rep.smooth_r = smoothness::smooth_p_norm_definition(pair.g1, r).upper;
  rep.a_qr = rep.smooth_q * rep.smooth_r;
  rep.rhs = rep.a_qr * rep.symbol_norm;
  rep.ratio = rep.rhs > 0 ? rep.lhs / rep.rhs : (rep.lhs > 0 ? std::numeric_limits<double>::infinity() : 0.0);
  rep.pass = rep.lhs <= rep.rhs * (1.0 + tol_disc);
  return rep;
}

double surrogate_constant_a(const SurrogatePair& pair) {
  return smoothness::kato_norm_interval(pair.g0).value * smoothness::kato_norm_interval(pair.g1).value;
}

}  // namespace opdiff::doi
