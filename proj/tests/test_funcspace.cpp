#include "doctest.h"

#include <cmath>

#include "opdiff/funcspace/bmo.hpp"
#include "opdiff/funcspace/dyadic.hpp"
#include "opdiff/funcspace/falpha.hpp"
#include "opdiff/funcspace/poisson.hpp"
#include "opdiff/funcspace/rational.hpp"
#include "support.hpp"

using namespace opdiff;
using testing_support::kInf;
using namespace opdiff::funcspace;

namespace {

SampledFunction on_grid(const UniformGrid& g, const std::function<cplx(double)>& f, const std::string& name = {}) {
  std::vector<cplx> v(g.n);
  for (std::size_t i = 0; i < g.n; ++i) v[i] = f(g.at(i));
  return SampledFunction::samples(g, std::move(v), name);
}

double sup_diff(const std::vector<cplx>& a, const std::vector<cplx>& b, std::size_t lo, std::size_t hi) {
  double m = 0;
  for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_SUITE("sampled_function") {
  TEST_CASE("grid validation") {
    CHECK_THROWS_AS(UniformGrid(0, 1, 1), InvalidInput);
    CHECK_THROWS_AS(UniformGrid(1, 1, 4), InvalidInput);
    const UniformGrid g(-1, 1, 5);
    CHECK(g.step() == doctest::Approx(0.5));
    CHECK(g.at(4) == doctest::Approx(1.0));
  }

  TEST_CASE("samples only answer on their own grid") {
    const UniformGrid g(0, 1, 3);
    const auto s = on_grid(g, [](double x) { return cplx(x * x); });
    CHECK(std::abs(s(0.5) - 0.25) < 1e-15);
    CHECK_THROWS_AS(s.sample(UniformGrid(0, 2, 3)), InvalidInput);
  }

  TEST_CASE("checked evaluation rejects non-finite values") {
    const auto f = SampledFunction::analytic([](double x) { return cplx(1.0 / x); });
    CHECK_THROWS_AS(f.checked(0.0), NumericalRejection);
  }
}

TEST_SUITE("dyadic_window") {
  TEST_CASE("partition of unity and support") {
    const auto w = dyadic_window_build(-10, 10);
    CHECK(std::abs(w.partition_sum(1.0) - 1.0) <= 1e-9);
    CHECK(DyadicWindow::bump(0.4) == 0.0);
    CHECK(DyadicWindow::bump(2.0 + 1e-12) == 0.0);
    CHECK(DyadicWindow::bump(0.5 - 1e-12) == 0.0);
    for (double x = std::ldexp(1.0, -9); x <= std::ldexp(1.0, 9); x *= 1.37)
      CHECK(std::abs(w.partition_sum(x) - 1.0) <= 1e-9);
  }

  TEST_CASE("bump is nonnegative") {
    for (double x = 0.0; x < 2.5; x += 0.01) CHECK(DyadicWindow::bump(x) >= 0.0);
  }

  TEST_CASE("telescoped closed form against direct summation") {
    const auto w = dyadic_window_build(-3, 4);
    for (double x = 1e-3; x < 64.0; x *= 1.19) {
      const double tele = DyadicWindow::chi(std::ldexp(x, -4)) - DyadicWindow::chi(std::ldexp(x, 1 - -3));
      CHECK(w.telescoped(x) == doctest::Approx(tele).epsilon(1e-15));
      CHECK(std::abs(w.partition_sum(x) - tele) <= 1e-12);
    }
  }

  TEST_CASE("smooth step endpoints and symmetry") {
    CHECK(smooth_step(0.0) == 0.0);
    CHECK(smooth_step(1.0) == 1.0);
    CHECK(smooth_step(0.5) == doctest::Approx(0.5));
    for (double t = 0.05; t < 1; t += 0.1) CHECK(smooth_step(t) + smooth_step(1 - t) == doctest::Approx(1.0));
  }

  TEST_CASE("window needs j_min < j_max") { CHECK_THROWS_AS(dyadic_window_build(3, 3), InvalidInput); }
}

TEST_SUITE("besov_norm") {
  const UniformGrid grid(-64.0, 64.0, 4096);

  TEST_CASE("constants have zero norm") {
    const auto f = on_grid(grid, [](double) { return cplx(2.5, -1.0); });
    const auto r = besov_norm(f, 1.0, dyadic_window_build(-4, 4));
    CHECK(r.norm <= 1e-12);
  }

  TEST_CASE("adding a constant leaves the norm unchanged") {
    auto g = [](double x) { return cplx(std::exp(-x * x)); };
    const auto w = dyadic_window_build(-3, 4);
    const double a = besov_norm(on_grid(grid, g), 1.5, w).norm;
    const double b = besov_norm(on_grid(grid, [&](double x) { return g(x) + 3.0; }), 1.5, w).norm;
    CHECK(a > 0.1);
    CHECK(b == doctest::Approx(a).epsilon(1e-12));
  }

  TEST_CASE("dyadic dilation shifts the band terms") {
    auto f = [](double x) { return cplx(1.0 / (1.0 + x * x), std::exp(-x * x)); };
    const int m = 2;
    const double lam = std::ldexp(1.0, m);
    const UniformGrid g2(grid.x_min / lam, grid.x_max / lam, grid.n);
    const auto rf = besov_norm(on_grid(grid, f), 1.0, dyadic_window_build(-4, 4));
    const auto rg = besov_norm(on_grid(g2, [&](double x) { return f(lam * x); }), 1.0, dyadic_window_build(-4 + m, 4 + m));
    REQUIRE(rf.bands.size() == rg.bands.size());
    for (std::size_t i = 0; i < rf.bands.size(); ++i) {
      CHECK(rg.bands[i].j == rf.bands[i].j + m);
      CHECK(rg.bands[i].term == doctest::Approx(rf.bands[i].term).epsilon(1e-6));
    }
  }

  TEST_CASE("nyquist violation names the band") {
    const UniformGrid coarse(-8.0, 8.0, 64);
    const auto f = on_grid(coarse, [](double x) { return cplx(std::sin(x)); });
    const int lim = nyquist_band_limit(coarse);
    CHECK_NOTHROW(besov_norm(f, 1.0, dyadic_window_build(-2, lim)));
    try {
      besov_norm(f, 1.0, dyadic_window_build(-2, lim + 1));
      FAIL("expected rejection");
    } catch (const InvalidInput& e) {
      CHECK(std::string(e.what()).find("band j = " + std::to_string(lim + 1)) != std::string::npos);
    }
  }

  TEST_CASE("p = 2 agrees with the band L2 mass") {
    // For p = 2 the band terms are Parseval sums of |w|^2 |f_hat|^2.
    auto f = [](double x) { return cplx(std::exp(-0.5 * x * x)); };
    const auto s = on_grid(grid, f);
    const auto r = besov_norm(s, 2.0, dyadic_window_build(-2, 2));
    const double dx = grid.step();
    const double dxi = kTwoPi / (static_cast<double>(grid.n) * dx);
    for (const auto& b : r.bands) {
      // Continuous transform of exp(-x^2/2) is sqrt(2 pi) exp(-xi^2/2).
      double acc = 0;
      for (long k = -static_cast<long>(grid.n) / 2; k < static_cast<long>(grid.n) / 2; ++k) {
        const double xi = static_cast<double>(k) * dxi;
        const double w = DyadicWindow::band(b.j, xi);
        acc += w * w * kTwoPi * std::exp(-xi * xi) * dxi / kTwoPi;
      }
      CHECK(b.positive == doctest::Approx(acc).epsilon(1e-6));
      CHECK(b.negative == doctest::Approx(b.positive).epsilon(1e-9));
    }
  }
}

TEST_SUITE("bmo_mean_oscillation") {
  TEST_CASE("constants and bounded functions") {
    const UniformGrid g(-4, 4, 256);
    CHECK(bmo_mean_oscillation(on_grid(g, [](double) { return cplx(7.0); })) == 0.0);
    const auto f = on_grid(g, [](double x) { return cplx(std::sin(3 * x), std::cos(x)); });
    double sup = 0;
    for (const auto& v : f.values()) sup = std::max(sup, std::abs(v));
    CHECK(bmo_mean_oscillation(f) <= 2 * sup);
  }

  TEST_CASE("shift and scale behaviour") {
    const UniformGrid g(-4, 4, 512);
    auto f = [](double x) { return cplx(std::atan(5 * x), 0.2 * x); };
    const double b = bmo_mean_oscillation(on_grid(g, f));
    CHECK(bmo_mean_oscillation(on_grid(g, [&](double x) { return f(x) + cplx(1.0, -2.0); })) ==
          doctest::Approx(b).epsilon(1e-12));
    const cplx c(-3.0, 4.0);
    CHECK(bmo_mean_oscillation(on_grid(g, [&](double x) { return c * f(x); })) ==
          doctest::Approx(5.0 * b).epsilon(1e-12));
  }

  TEST_CASE("log|x| is stable under refinement") {
    auto f = [](double x) { return cplx(std::log(std::abs(x))); };
    const double a = bmo_mean_oscillation(on_grid(UniformGrid(-16, 16, 2048), f));
    const double b = bmo_mean_oscillation(on_grid(UniformGrid(-16, 16, 4096), f));
    CHECK(a > 0.0);
    CHECK(std::abs(b / a - 1.0) <= 0.1);
  }
}

TEST_SUITE("f_alpha") {
  TEST_CASE("alpha = 0 reproduces the cutoff") {
    const auto spec = FAlphaSpec::make(0.0, 1.0, 1.0);
    for (double x = -0.9; x < 0.9; x += 0.013)
      if (x != 0.0) CHECK(std::abs(f_alpha_value(spec, x) - spec.cutoff(x)) <= 1e-15);
  }

  TEST_CASE("zero amplitudes give zero") {
    const auto spec = FAlphaSpec::make(1.5, 0.0, 0.0);
    const auto s = f_alpha_sample(spec, UniformGrid(-1, 1, 101));
    for (const auto& v : s.values()) CHECK(v == cplx(0.0));
  }

  TEST_CASE("pointwise values") {
    const auto spec = FAlphaSpec::make(1.0, cplx(2.0, 1.0), -3.0);
    const double x = 0.5 * std::exp(-2.0);
    CHECK(std::abs(f_alpha_value(spec, x) - cplx(2.0, 1.0) / (2.0 + std::log(2.0))) <= 1e-14);
    CHECK(std::abs(f_alpha_value(spec, -x) - cplx(-3.0) / (2.0 + std::log(2.0))) <= 1e-14);
    CHECK(f_alpha_value(spec, 0.0) == cplx(0.0));
    CHECK(f_alpha_value(spec, 0.8) == cplx(0.0));
  }

  TEST_CASE("cutoff validation") {
    CHECK_THROWS_AS(FAlphaSpec::make(1.0, 1.0, 0.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(FAlphaSpec::make(1.0, 1.0, 0.0, 0.0), InvalidInput);
  }

  TEST_CASE("fourier transform against high precision quadrature") {
    // 30-digit reference values of (1/2pi) int e^{-itx} F(x) dx, c = 0.75.
    struct Ref {
      double alpha, ap, am, t, re, im;
    };
    const Ref refs[] = {
        {1, 1, 0, 100, -0.00010071510471582174, -0.00030223409138915433},
        {1, 1, 0, 1000, -4.5826584460049371e-6, -2.0800425578694105e-5},
        {2, 1, 0, 100, -6.0275652542679454e-5, -7.1850593973192925e-5},
        {2, 1, 0, 1000, -1.2476259423499941e-6, -2.6309488122305893e-6},
        {1, 1, 1, 100, -0.00020143020943164349, 0.0},
        {1, 1, 1, 1000, -9.1653168920098743e-6, 0.0},
        {0.25, 1, 0, 100, -8.089601094663537e-5, -0.0010537606321402671},
        {0.25, 1, 0, 1000, -5.1188540950688354e-6, -9.5924054159977655e-5},
    };
    for (const auto& r : refs) {
      CAPTURE(r.alpha);
      CAPTURE(r.t);
      const auto v = f_alpha_fourier(FAlphaSpec::make(r.alpha, r.ap, r.am), r.t);
      const cplx ref(r.re, r.im);
      CHECK(std::abs(v.value - ref) <= 1e-9 * std::abs(ref));
    }
  }

  TEST_CASE("smooth cutoff alone decays fast") {
    const auto spec = FAlphaSpec::make(0.0, 1.0, 1.0);
    const double a = std::abs(f_alpha_fourier(spec, 100.0).value);
    const double b = std::abs(f_alpha_fourier(spec, 200.0).value);
    const double c = std::abs(f_alpha_fourier(spec, 400.0).value);
    CHECK(b / a < 0.1);
    CHECK(c / b < b / a);
  }

  TEST_CASE("asymptotic table approaches the leading term") {
    const auto rows = f_alpha_fourier_asymptotics(FAlphaSpec::make(1.0, 1.0, 0.0), {1e3, 1e4});
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(std::abs(rows[1].ratio) - 1.0) < std::abs(std::abs(rows[0].ratio) - 1.0));
    CHECK_THROWS_AS(f_alpha_fourier_asymptotics(FAlphaSpec::make(1.0, 1.0, 0.0), {10.0}), InvalidInput);
  }

  TEST_CASE("leading term formulas") {
    const double t = 1e4, l = std::log(t);
    const cplx jump = f_alpha_leading_term(FAlphaSpec::make(1.0, 1.0, 0.0), t);
    CHECK(std::abs(jump - 1.0 / (kTwoPi * kI * t * l)) <= 1e-15);
  }
}

TEST_SUITE("poisson_smooth") {
  TEST_CASE("unit mass in the interior") {
    const double eps = 0.01;
    const UniformGrid g(-10.0, 10.0, 4001);
    const auto r = poisson_smooth(on_grid(g, [](double) { return cplx(1.0); }), eps);
    CHECK(r.mass[2000] >= 0.999);
    CHECK(std::abs(r.smoothed.values()[2000] - 1.0) <= 1e-3);
  }

  TEST_CASE("even input stays even") {
    const UniformGrid g(-5.0, 5.0, 801);
    const auto r = poisson_smooth(on_grid(g, [](double x) { return cplx(std::cos(x) * std::exp(-x * x)); }), 0.3);
    const auto& v = r.smoothed.values();
    for (std::size_t i = 0; i < g.n; ++i) CHECK(std::abs(v[i] - v[g.n - 1 - i]) <= 1e-14);
  }

  TEST_CASE("approaches f as eps shrinks") {
    const UniformGrid g(-40.0, 40.0, 8001);
    const auto f = on_grid(g, [](double x) { return cplx(std::exp(-x * x)); });
    double prev = kInf;
    for (double eps : {1.0, 0.5, 0.25, 0.1, 0.05}) {
      const auto r = poisson_smooth(f, eps);
      const double d = sup_diff(r.smoothed.values(), f.values(), 3000, 5001);
      CHECK(d < prev);
      prev = d;
    }
  }

  TEST_CASE("eps must be positive") {
    CHECK_THROWS_AS(poisson_smooth(on_grid(UniformGrid(0, 1, 4), [](double) { return cplx(1); }), 0.0), InvalidInput);
  }
}

TEST_SUITE("rational") {
  TEST_CASE("cayley maps are inverse") {
    for (double x : {-7.0, -0.3, 0.0, 2.0, 40.0}) CHECK(std::abs(circle_to_line(line_to_circle(x)) - x) <= 1e-12);
  }

  TEST_CASE("partial fractions evaluate and rejects real poles") {
    const auto r = RationalFunction::partial_fractions(0.5, {{cplx(1, 2), {1.0, cplx(0, 1)}}});
    const double x = 0.7;
    const cplx d = x - cplx(1, 2);
    CHECK(std::abs(r(x) - (0.5 + 1.0 / d + kI / (d * d))) <= 1e-15);
    CHECK(r.total_multiplicity() == 2);
    CHECK_THROWS_AS(RationalFunction::partial_fractions(0.0, {{cplx(1, 0), {1.0}}}), InvalidInput);
  }

  TEST_CASE("single harmonic is damped by 1 - k/n") {
    const int m = 5, k = 3, n = 8;
    std::vector<cplx> c(2 * m + 1);
    c[k + m] = 1.0;
    const auto out = fejer_mean(c, m, n);
    for (int j = -m; j <= m; ++j)
      CHECK(std::abs(out[j + m] - (j == k ? cplx(1.0 - double(k) / n) : cplx(0.0))) <= 1e-15);
  }

  TEST_CASE("fejer sum of a resolvent converges") {
    const auto f = SampledFunction::analytic([](double x) { return 1.0 / (x - kI); });
    double prev = kInf;
    for (int n : {16, 64, 256}) {
      const auto fn = fejer_rational_approx(f, n);
      double err = 0;
      for (double x = -50; x <= 50; x += 0.37) err = std::max(err, std::abs(fn(x) - f(x)));
      CHECK(err < prev);
      prev = err;
    }
    CHECK(prev <= 1e-2);
  }

  TEST_CASE("constants are reproduced") {
    const auto fn = fejer_rational_approx(constant_function(cplx(2.0, -1.0)), 7);
    for (double x : {-100.0, -1.0, 0.0, 3.0, 1e4}) CHECK(std::abs(fn(x) - cplx(2.0, -1.0)) <= 1e-12);
  }

  TEST_CASE("fast growth is rejected") {
    const auto f = SampledFunction::analytic([](double x) { return cplx(x * x); });
    CHECK_THROWS_AS(fejer_rational_approx(f, 4), InvalidInput);
  }

  TEST_CASE("fejer sums do not increase the sup norm") {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const int m = 12;
      auto rng = testing_support::rng_for("fejer", t);
      std::vector<cplx> c(2 * m + 1);
      for (auto& v : c) v = rng.complex_normal();
      auto eval = [&](const std::vector<cplx>& cc, double th) {
        cplx acc{};
        for (int j = -m; j <= m; ++j) acc += cc[j + m] * std::polar(1.0, j * th);
        return std::abs(acc);
      };
      for (int n : {3, 6, 13}) {
        const auto cn = fejer_mean(c, m, n);
        double sup_h = 0, sup_hn = 0;
        for (int s = 0; s < 4096; ++s) {
          const double th = kTwoPi * s / 4096.0;
          sup_h = std::max(sup_h, eval(c, th));
          sup_hn = std::max(sup_hn, eval(cn, th));
        }
        CHECK(sup_hn <= sup_h * (1 + 1e-3));
      }
    }
  }
}
