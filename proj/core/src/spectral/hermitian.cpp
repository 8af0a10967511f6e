#include "opdiff/spectral/hermitian.hpp"

#include "dense.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "opdiff/spectral/pair.hpp"
#include "opdiff/spectral/schatten.hpp"

namespace opdiff::spectral {

struct HermitianOperator::Cache {
  std::once_flag once;
  RealVector values;
  Matrix vectors;
};

namespace {

double asymmetry(const Matrix& a) { return max_abs(a - a.adjoint()); }

void check_decomposition(const Matrix& a, const RealVector& w, const Matrix& v) {
  const Eigen::Index n = a.rows();
  const double orth = max_abs(v.adjoint() * v - Matrix::Identity(n, n));
  const double scale = std::max(a.norm(), 1e-300);
  const double recon = (v * w.cast<cplx>().asDiagonal() * v.adjoint() - a).norm() / scale;
  if (orth > 1e-10 || (a.norm() > 0 && recon > HermitianOperator::kReconstructionTol)) {
    std::ostringstream os;
    os << "eigendecomposition rejected: orthonormality defect " << orth << ", reconstruction error " << recon;
    throw NumericalRejection(os.str());
  }
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix entries) : entries_(std::move(entries)), cache_(std::make_shared<Cache>()) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw InvalidInput("Hermitian operator needs a non-empty square matrix");
  const double d = asymmetry(entries_);
  if (d > kSymmetryTol) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max asymmetry " << d;
    throw InvalidInput(os.str());
  }
}

HermitianOperator HermitianOperator::diagonal(const RealVector& d) {
  HermitianOperator h(d.cast<cplx>().asDiagonal().toDenseMatrix());
  std::vector<Eigen::Index> order(static_cast<std::size_t>(d.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return d[a] < d[b]; });
  Cache& c = *h.cache_;
  std::call_once(c.once, [&] {
    c.values.resize(d.size());
    c.vectors = Matrix::Zero(d.size(), d.size());
    for (Eigen::Index k = 0; k < d.size(); ++k) {
      c.values[k] = d[order[static_cast<std::size_t>(k)]];
      c.vectors(order[static_cast<std::size_t>(k)], k) = 1.0;
    }
  });
  return h;
}

const HermitianOperator::Cache& HermitianOperator::decomposed() const {
  Cache& c = *cache_;
  std::call_once(c.once, [&] {
    RealVector w;
    Matrix v;
    detail::hermitian_eigen(entries_, w, &v);
    check_decomposition(entries_, w, v);
    c.values = std::move(w);
    c.vectors = std::move(v);
  });
  return c;
}

const RealVector& HermitianOperator::eigenvalues() const { return decomposed().values; }
const Matrix& HermitianOperator::eigenvectors() const { return decomposed().vectors; }

SpectralDecomposition eig_decompose(const HermitianOperator& a) { return {a.eigenvalues(), a.eigenvectors()}; }

Matrix func_calculus(const HermitianOperator& a, const std::function<cplx(double)>& f) {
  const RealVector& w = a.eigenvalues();
  const Matrix& v = a.eigenvectors();
  Vector fw(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    fw[i] = f(w[i]);
    if (!std::isfinite(fw[i].real()) || !std::isfinite(fw[i].imag())) {
      std::ostringstream os;
      os.precision(17);
      os << "function undefined at eigenvalue " << w[i];
      throw NumericalRejection(os.str());
    }
  }
  return v * fw.asDiagonal() * v.adjoint();
}

Matrix func_calculus(const HermitianOperator& a, const funcspace::SampledFunction& f) {
  return func_calculus(a, [&f](double x) { return f(x); });
}

Matrix spectral_projection(const HermitianOperator& a, double lo, double hi) {
  if (!(lo < hi)) throw InvalidInput("spectral projection needs lo < hi");
  const RealVector& w = a.eigenvalues();
  const Matrix& v = a.eigenvectors();
  Matrix p = Matrix::Zero(a.dim(), a.dim());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] > lo && w[i] <= hi) p.noalias() += v.col(i) * v.col(i).adjoint();
  return p;
}

Matrix resolvent(const HermitianOperator& a, cplx z) {
  if (z.imag() == 0.0) throw InvalidInput("resolvent needs Im z != 0");
  Matrix r = func_calculus(a, [z](double x) { return 1.0 / (x - z); });
  const Eigen::Index n = a.dim();
  const double res = max_abs((a.entries() - z * Matrix::Identity(n, n)) * r - Matrix::Identity(n, n));
  if (res > 1e-10) {
    std::ostringstream os;
    os << "resolvent residual " << res << " exceeds 1e-10 at z = " << z;
    throw NumericalRejection(os.str());
  }
  return r;
}

RectFactor::RectFactor(Matrix g0_, Matrix g1_) : g0(std::move(g0_)), g1(std::move(g1_)) {
  if (g0.rows() != g1.rows() || g0.cols() != g1.cols()) throw InvalidInput("factor matrices differ in shape");
}

OperatorPair::OperatorPair(HermitianOperator h0, HermitianOperator h1, RectFactor factor)
    : h0_(std::move(h0)), h1_(std::move(h1)), factor_(std::move(factor)) {
  if (h0_.dim() != h1_.dim() || factor_.source_dim() != h0_.dim())
    throw InvalidInput("operator pair dimensions do not match");
  const double d = max_abs(h1_.entries() - h0_.entries() - factor_.perturbation());
  if (d > kFactorTol) {
    std::ostringstream os;
    os << "H1 - H0 - G1*G0 has max entry " << d;
    throw InvalidInput(os.str());
  }
}

OperatorPair OperatorPair::assemble(const HermitianOperator& h0, RectFactor factor) {
  Matrix v = factor.perturbation();
  HermitianOperator h1(h0.entries() + v);
  return OperatorPair(h0, std::move(h1), std::move(factor));
}

std::uint64_t OperatorPair::hash() const {
  std::uint64_t h = matrix_hash(h0_.entries());
  h = h * 0x100000001b3ULL ^ matrix_hash(factor_.g0);
  h = h * 0x100000001b3ULL ^ matrix_hash(factor_.g1);
  return h;
}

}  // namespace opdiff::spectral
