#include "opdiff/smoothness/multop_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "opdiff/funcspace/dyadic.hpp"
#include "opdiff/random.hpp"

namespace opdiff::smoothness {

MultOpModel::MultOpModel(double x_min, double x_max, std::vector<Matrix> g_blocks)
    : x_min_(x_min), x_max_(x_max), blocks_(std::move(g_blocks)) {
  if (!(x_min < x_max)) throw InvalidInput("model needs x_min < x_max");
  if (blocks_.empty()) throw InvalidInput("model needs at least one cell");
  const Eigen::Index k = blocks_.front().rows(), h = blocks_.front().cols();
  if (k == 0 || h == 0) throw InvalidInput("model blocks must be non-empty");
  for (const auto& b : blocks_)
    if (b.rows() != k || b.cols() != h) throw InvalidInput("model blocks differ in shape");
}

MultOpModel MultOpModel::identity(double x_min, double x_max, std::size_t cells, Eigen::Index dim) {
  return MultOpModel(x_min, x_max, std::vector<Matrix>(cells, Matrix::Identity(dim, dim)));
}

MultOpModel MultOpModel::random(double x_min, double x_max, std::size_t cells, Eigen::Index h_dim,
                                Eigen::Index k_dim, std::uint64_t seed, std::uint64_t stream) {
  Philox4x64 rng(seed, stream);
  std::vector<Matrix> b;
  b.reserve(cells);
  for (std::size_t i = 0; i < cells; ++i) b.push_back(random_complex_gaussian(rng, k_dim, h_dim));
  return MultOpModel(x_min, x_max, std::move(b));
}

MultOpModel MultOpModel::block_counterexample(std::size_t n) {
  const Eigen::Index nn = static_cast<Eigen::Index>(n);
  std::vector<Matrix> b;
  for (Eigen::Index i = 0; i < nn; ++i) {
    Matrix g = Matrix::Zero(nn, nn);
    g(i, i) = 1.0;
    b.push_back(std::move(g));
  }
  return MultOpModel(0.0, static_cast<double>(n), std::move(b));
}

MultOpModel MultOpModel::plateau(double x_min, double x_max, std::size_t cells, Eigen::Index h_dim,
                                 Eigen::Index k_dim, std::uint64_t seed, std::uint64_t stream) {
  Philox4x64 rng(seed, stream);
  const Matrix a = random_complex_gaussian(rng, k_dim, h_dim);
  const Matrix bm = random_complex_gaussian(rng, k_dim, h_dim);
  const double third = (x_max - x_min) / 3.0;
  return from_function(x_min, x_max, cells, [&](double x) -> Matrix {
    return a + funcspace::smooth_step((x - x_min - third) / third) * bm;
  });
}

MultOpModel MultOpModel::from_function(double x_min, double x_max, std::size_t cells,
                                       const std::function<Matrix(double)>& g) {
  if (cells == 0) throw InvalidInput("model needs at least one cell");
  const double dx = (x_max - x_min) / static_cast<double>(cells);
  std::vector<Matrix> b;
  b.reserve(cells);
  for (std::size_t i = 0; i < cells; ++i) b.push_back(g(x_min + (static_cast<double>(i) + 0.5) * dx));
  return MultOpModel(x_min, x_max, std::move(b));
}

MultOpModel MultOpModel::from_csv(const std::string& path, double x_min, double x_max, Eigen::Index h_dim,
                                  Eigen::Index k_dim) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open model CSV: " + path);
  std::vector<Matrix> b;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<double> vals;
    double v;
    while (ls >> v) vals.push_back(v);
    if (vals.size() != static_cast<std::size_t>(2 * k_dim * h_dim)) {
      std::ostringstream os;
      os << path << ":" << lineno << ": expected " << 2 * k_dim * h_dim << " values, got " << vals.size();
      throw InvalidInput(os.str());
    }
    Matrix g(k_dim, h_dim);
    std::size_t t = 0;
    for (Eigen::Index r = 0; r < k_dim; ++r)
      for (Eigen::Index c = 0; c < h_dim; ++c, t += 2) g(r, c) = cplx{vals[t], vals[t + 1]};
    b.push_back(std::move(g));
  }
  return MultOpModel(x_min, x_max, std::move(b));
}

Matrix MultOpModel::g_operator() const {
  const Eigen::Index h = h_dim();
  Matrix g(k_dim(), h * static_cast<Eigen::Index>(cells()));
  const double w = std::sqrt(dx());
  for (std::size_t i = 0; i < cells(); ++i) g.middleCols(static_cast<Eigen::Index>(i) * h, h) = blocks_[i] * w;
  return g;
}

RealVector MultOpModel::spectrum() const {
  const Eigen::Index h = h_dim();
  RealVector s(h * static_cast<Eigen::Index>(cells()));
  for (std::size_t i = 0; i < cells(); ++i) s.segment(static_cast<Eigen::Index>(i) * h, h).setConstant(midpoint(i));
  return s;
}

spectral::HermitianOperator MultOpModel::multiplication_operator() const {
  return spectral::HermitianOperator::diagonal(spectrum());
}

double MultOpModel::max_block_norm(spectral::SchattenIndex p) const {
  double m = 0.0;
  for (const auto& b : blocks_) m = std::max(m, spectral::schatten_norm(b, p));
  return m;
}

MultOpModel MultOpModel::scaled(cplx c) const {
  std::vector<Matrix> b = blocks_;
  for (auto& m : b) m *= c;
  return MultOpModel(x_min_, x_max_, std::move(b));
}

}  // namespace opdiff::smoothness
