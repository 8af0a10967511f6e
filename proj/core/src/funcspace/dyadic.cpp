#include "opdiff/funcspace/dyadic.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <sstream>

namespace opdiff::funcspace {

namespace {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// Owns an FFTW buffer and one in-place plan.
class FftBuffer {
 public:
  FftBuffer(std::size_t n, int sign) : n_(n) {
    data_ = fftw_alloc_complex(n);
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), data_, data_, sign, FFTW_ESTIMATE);
  }
  ~FftBuffer() {
    {
      std::lock_guard<std::mutex> lock(fftw_planner_mutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(data_);
  }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;

  cplx* data() { return reinterpret_cast<cplx*>(data_); }
  void execute() { fftw_execute(plan_); }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  fftw_complex* data_;
  fftw_plan plan_;
};

}  // namespace

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double smooth_step_derivative(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  const double s = a + b;
  return a * b * (1.0 / (t * t) + 1.0 / ((1.0 - t) * (1.0 - t))) / (s * s);
}

DyadicWindow::DyadicWindow(int j_min, int j_max) : j_min_(j_min), j_max_(j_max) {
  if (!(j_min < j_max)) throw InvalidInput("dyadic window needs j_min < j_max");
}

double DyadicWindow::chi(double x) { return smooth_step(2.0 - x); }

double DyadicWindow::bump(double x) { return chi(x) - chi(2.0 * x); }

double DyadicWindow::band(int j, double xi) { return bump(std::ldexp(xi, -j)); }

double DyadicWindow::partition_sum(double x) const {
  double acc = 0.0;
  for (int j = j_min_; j <= j_max_; ++j) acc += band(j, x);
  return acc;
}

double DyadicWindow::telescoped(double x) const {
  return chi(std::ldexp(x, -j_max_)) - chi(std::ldexp(x, 1 - j_min_));
}

std::string DyadicWindow::hash() const {
  std::ostringstream os;
  os << "w(x)=chi(x)-chi(2x);chi(x)=s(2-x);s=exp-ratio;j_min=" << j_min_ << ";j_max=" << j_max_;
  return hex64(fnv1a64(os.str()));
}

DyadicWindow dyadic_window_build(int j_min, int j_max) { return DyadicWindow(j_min, j_max); }

int nyquist_band_limit(const UniformGrid& grid) {
  const double nyq = kPi / grid.step();
  return static_cast<int>(std::floor(std::log2(nyq))) - 1;
}

BesovResult besov_norm(const SampledFunction& f, double p, const DyadicWindow& window) {
  if (!(p > 0.0)) throw InvalidInput("Besov exponent must be positive");
  if (!f.grid()) throw InvalidInput("Besov norm needs grid samples");
  const UniformGrid& grid = *f.grid();
  const double dx = grid.step();
  const double nyq = kPi / dx;
  for (int j = window.j_min(); j <= window.j_max(); ++j) {
    if (std::ldexp(1.0, j + 1) > nyq) {
      std::ostringstream os;
      os << "band j = " << j << " reaches frequency 2^" << j + 1 << " beyond the Nyquist limit " << nyq;
      throw InvalidInput(os.str());
    }
  }

  const std::size_t n = grid.n;
  FftBuffer fwd(n, FFTW_FORWARD);
  FftBuffer inv(n, FFTW_BACKWARD);
  const std::vector<cplx>& v = f.values();
  std::copy(v.begin(), v.end(), fwd.data());
  fwd.execute();
  const cplx* spec = fwd.data();

  const double dxi = kTwoPi / (static_cast<double>(n) * dx);
  auto freq = [&](std::size_t k) {
    const long kk = k < (n + 1) / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
    return static_cast<double>(kk) * dxi;
  };

  auto band_norm = [&](int j, double sign) {
    cplx* out = inv.data();
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
      const double w = DyadicWindow::band(j, sign * freq(k));
      out[k] = w == 0.0 ? cplx{} : spec[k] * w;
      any = any || w != 0.0;
    }
    if (!any) return 0.0;
    inv.execute();
    double acc = 0.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) acc += std::pow(std::abs(out[k]) * inv_n, p);
    return acc * dx;
  };

  BesovResult r;
  r.p = p;
  r.window_hash = window.hash();
  double total = 0.0;
  for (int j = window.j_min(); j <= window.j_max(); ++j) {
    BesovBand b;
    b.j = j;
    b.positive = band_norm(j, 1.0);
    b.negative = band_norm(j, -1.0);
    b.term = std::ldexp(b.positive + b.negative, j);
    total += b.term;
    r.bands.push_back(b);
  }
  r.norm = std::pow(total, 1.0 / p);
  return r;
}

double loglog_slope(const std::vector<BesovBand>& bands, int j_lo, int j_hi) {
  if (j_lo < 1 || j_hi <= j_lo) throw InvalidInput("slope fit needs 1 <= j_lo < j_hi");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& b : bands) {
    if (b.j < j_lo || b.j > j_hi) continue;
    if (!(b.term > 0.0)) throw NumericalRejection("slope fit hit a vanishing band term");
    const double x = std::log(static_cast<double>(b.j));
    const double y = std::log(b.term);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw InvalidInput("slope fit needs at least two bands in range");
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace opdiff::funcspace
