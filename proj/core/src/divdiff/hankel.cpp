#include "opdiff/divdiff/hankel.hpp"

#include <cmath>
#include <limits>

#include "opdiff/spectral/schatten.hpp"

namespace opdiff::divdiff {

namespace {

Vector to_vector(const std::vector<cplx>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

struct CutoffSum {
  double cutoff;
  double smallest_kept = std::numeric_limits<double>::infinity();
  double largest_dropped = 0.0;

  double operator()(const RealVector& s, double p) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s[i] > cutoff) {
        acc += std::pow(s[i], p);
        smallest_kept = std::min(smallest_kept, s[i]);
      } else {
        largest_dropped = std::max(largest_dropped, s[i]);
      }
    }
    return acc;
  }
};

}  // namespace

HankelBlock hankel_blocks(const std::vector<cplx>& f_values, const HardyProjectionPair& proj) {
  if (static_cast<Eigen::Index>(f_values.size()) != proj.p_plus.rows())
    throw InvalidInput("function samples do not match the projection size");
  const Vector f = to_vector(f_values);
  HankelBlock b;
  b.a_block = proj.q_plus.adjoint() * f.asDiagonal() * proj.q_minus;
  b.b_block = proj.q_minus.adjoint() * f.asDiagonal() * proj.q_plus;
  return b;
}

HankelIdentityReport hankel_schatten_identity_check(const funcspace::SampledFunction& f,
                                                    const HardyProjectionPair& proj, const funcspace::UniformGrid& grid,
                                                    double p) {
  if (proj.variant != HilbertVariant::periodic_multiplier)
    throw InvalidInput("Hankel identity check needs the periodic-multiplier model");
  const std::vector<cplx> v = f.sample(grid);
  std::vector<cplx> vbar(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) vbar[i] = std::conj(v[i]);
  const Vector fd = to_vector(v);

  const Matrix comm = proj.p_plus * fd.asDiagonal() * proj.p_minus - proj.p_minus * fd.asDiagonal() * proj.p_plus;
  const RealVector s_comm = spectral::singular_values(comm);
  const RealVector s_hf = spectral::singular_values(hankel_blocks(v, proj).b_block);
  const RealVector s_hfbar = spectral::singular_values(hankel_blocks(vbar, proj).b_block);

  HankelIdentityReport r;
  r.p = p;
  const double s1 = s_comm.size() > 0 ? s_comm.maxCoeff() : 0.0;
  r.cutoff = kHankelRankCutoff * s1;
  CutoffSum sum{r.cutoff};
  r.lhs = sum(s_comm, p);
  r.rhs = sum(s_hf, p) + sum(s_hfbar, p);
  r.smallest_kept = sum.smallest_kept;
  r.largest_dropped = sum.largest_dropped;
  r.residual = std::abs(r.lhs - r.rhs) / std::max(r.lhs, 1e-14);

  const auto k = divided_difference_kernel(f, grid, default_rule(f));
  r.grid_lhs = std::pow(kTwoPi, -p) * spectral::schatten_power_sum(k.matrix, p);
  r.discretization_gap = r.lhs > 0 ? std::abs(r.grid_lhs - r.lhs) / r.lhs : 0.0;
  return r;
}

PellerReport peller_two_sided_check(const funcspace::SampledFunction& f, double p,
                                    const funcspace::DyadicWindow& window, const funcspace::UniformGrid& grid) {
  const auto proj = hardy_projections(hilbert_transform(HilbertVariant::periodic_multiplier, grid.n, grid));
  const std::vector<cplx> v = f.sample(grid);
  std::vector<cplx> vbar(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) vbar[i] = std::conj(v[i]);
  const RealVector s_hf = spectral::singular_values(hankel_blocks(v, proj).b_block);
  const RealVector s_hfbar = spectral::singular_values(hankel_blocks(vbar, proj).b_block);
  const double s1 = std::max(s_hf.size() ? s_hf.maxCoeff() : 0.0, s_hfbar.size() ? s_hfbar.maxCoeff() : 0.0);
  CutoffSum sum{kHankelRankCutoff * s1};

  PellerReport r;
  r.hankel_side = std::pow(sum(s_hf, p) + sum(s_hfbar, p), 1.0 / p);
  const auto samples = funcspace::SampledFunction::samples(grid, v, f.name());
  r.besov = funcspace::besov_norm(samples, p, window).norm;
  r.ratio = r.besov > 0 ? r.hankel_side / r.besov : std::numeric_limits<double>::quiet_NaN();
  return r;
}

}  // namespace opdiff::divdiff
