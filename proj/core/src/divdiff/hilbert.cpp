#include "opdiff/divdiff/hilbert.hpp"

#include "dense.hpp"

#include <sstream>

namespace opdiff::divdiff {

namespace {

Matrix line_kernel(std::size_t n) {
  const Eigen::Index nn = static_cast<Eigen::Index>(n);
  Matrix j = Matrix::Zero(nn, nn);
  // (1/(pi i)) dx / (x_n - x_m) = -i / (pi (n - m)) on a uniform grid.
  for (Eigen::Index m = 0; m < nn; ++m)
    for (Eigen::Index k = 0; k < nn; ++k)
      if (m != k) j(m, k) = cplx{0.0, -1.0 / (kPi * static_cast<double>(k - m))};
  return j;
}

void split_sign(const Matrix& h, Matrix& plus, Matrix& minus, Matrix& sign) {
  RealVector w;
  Matrix v;
  detail::hermitian_eigen(h, w, &v);
  Eigen::Index np = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] >= 0.0) ++np;
  plus.resize(h.rows(), np);
  minus.resize(h.rows(), h.rows() - np);
  Eigen::Index ip = 0, im = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] >= 0.0)
      plus.col(ip++) = v.col(i);
    else
      minus.col(im++) = v.col(i);
  }
  sign = plus * plus.adjoint() - minus * minus.adjoint();
}

}  // namespace

Matrix spectral_sign(const Matrix& h) {
  Matrix p, m, s;
  split_sign(h, p, m, s);
  return s;
}

DiscreteHilbertTransform hilbert_transform(HilbertVariant variant, std::size_t n,
                                           const std::optional<funcspace::UniformGrid>& grid) {
  if (n < 2) throw InvalidInput("Hilbert transform needs N >= 2");
  if (grid && grid->n != n) throw InvalidInput("grid size does not match N");
  DiscreteHilbertTransform t;
  t.variant = variant;
  t.grid = grid;
  const Eigen::Index nn = static_cast<Eigen::Index>(n);
  switch (variant) {
    case HilbertVariant::periodic_multiplier: {
      const Eigen::Index npos = (nn + 1) / 2;  // k = 0 .. ceil(N/2)-1 carry +1
      t.basis_plus.resize(nn, npos);
      t.basis_minus.resize(nn, nn - npos);
      const double norm = 1.0 / std::sqrt(static_cast<double>(n));
      for (Eigen::Index k = 0; k < nn; ++k) {
        const Eigen::Index ks = k < npos ? k : k - nn;
        for (Eigen::Index m = 0; m < nn; ++m) {
          // Reduce the phase index modulo N before scaling to keep it exact.
          const Eigen::Index ph = ((ks * m) % nn + nn) % nn;
          const cplx e = std::polar(norm, kTwoPi * static_cast<double>(ph) / static_cast<double>(nn));
          if (k < npos)
            t.basis_plus(m, k) = e;
          else
            t.basis_minus(m, k - npos) = e;
        }
      }
      t.matrix = t.basis_plus * t.basis_plus.adjoint() - t.basis_minus * t.basis_minus.adjoint();
      t.matrix = (0.5 * (t.matrix + t.matrix.adjoint())).eval();
      break;
    }
    case HilbertVariant::line_kernel:
      if (!grid) throw InvalidInput("line-kernel Hilbert transform needs a grid");
      t.matrix = line_kernel(n);
      break;
    case HilbertVariant::involution_projected: {
      if (!grid) throw InvalidInput("involution-projected Hilbert transform needs a grid");
      split_sign(line_kernel(n), t.basis_plus, t.basis_minus, t.matrix);
      t.matrix = (0.5 * (t.matrix + t.matrix.adjoint())).eval();
      break;
    }
  }
  return t;
}

HardyProjectionPair hardy_projections(const DiscreteHilbertTransform& j) {
  const Eigen::Index n = j.matrix.rows();
  const Matrix id = Matrix::Identity(n, n);
  const double defect = max_abs(j.matrix * j.matrix - id);
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "Hilbert transform is not an involution: ||J^2 - I||_max = " << defect;
    throw InvalidInput(os.str());
  }
  HardyProjectionPair p;
  p.variant = j.variant;
  p.p_plus = 0.5 * (id + j.matrix);
  p.p_minus = 0.5 * (id - j.matrix);
  if (j.basis_plus.size() + j.basis_minus.size() > 0) {
    p.q_plus = j.basis_plus;
    p.q_minus = j.basis_minus;
  } else {
    Matrix s;
    split_sign(j.matrix, p.q_plus, p.q_minus, s);
  }
  return p;
}

}  // namespace opdiff::divdiff
