#include "opdiff/lab/experiments.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "opdiff/divdiff/hankel.hpp"
#include "opdiff/doi/quasi.hpp"
#include "opdiff/doi/sharpness.hpp"
#include "opdiff/funcspace/bmo.hpp"
#include "opdiff/funcspace/dyadic.hpp"
#include "opdiff/funcspace/falpha.hpp"
#include "opdiff/lab/ensemble.hpp"
#include "opdiff/lab/function_spec.hpp"
#include "opdiff/parallel.hpp"
#include "opdiff/smoothness/interpolation.hpp"
#include "opdiff/smoothness/kato.hpp"

#ifndef OPDIFF_VERSION
#define OPDIFF_VERSION "0.0.0"
#endif

namespace opdiff::lab {

namespace {

using funcspace::UniformGrid;
using smoothness::MultOpModel;
using Rows = std::vector<ResultRow>;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Row that only reports a value; passes when the value is finite.
ResultRow value_row(std::string exp, std::string check, double value) {
  ResultRow r;
  r.experiment = std::move(exp);
  r.check = std::move(check);
  r.lhs = value;
  r.rhs = kNaN;
  r.ratio = kNaN;
  r.tol = kNaN;
  r.pass = std::isfinite(value);
  return r;
}

// |lhs - rhs| <= tol, absolute.
ResultRow near_row(std::string exp, std::string check, double lhs, double rhs, double tol) {
  ResultRow r;
  r.experiment = std::move(exp);
  r.check = std::move(check);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = rhs != 0 ? lhs / rhs : kNaN;
  r.tol = tol;
  r.pass = std::isfinite(lhs) && std::abs(lhs - rhs) <= tol;
  return r;
}

ResultRow annotate(ResultRow r, std::optional<long long> n, const std::string& notes = {}) {
  r.n = n;
  if (!notes.empty()) r.notes = r.notes.empty() ? notes : notes + "; " + r.notes;
  return r;
}

// Runs body; an exception becomes a failed row named `check`.
void guarded(Rows& out, const std::string& exp, const std::string& check, std::optional<long long> n,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.push_back(annotate(failure_row(exp, check, e.what()), n));
  }
}

// Evaluates units in parallel and concatenates their rows in index order.
Rows fan_out(std::size_t units, const std::function<void(std::size_t, Rows&)>& unit) {
  std::vector<Rows> parts(units);
  parallel_for(units, [&](std::size_t i) { unit(i, parts[i]); });
  Rows all;
  for (auto& p : parts)
    for (auto& r : p) all.push_back(std::move(r));
  return all;
}

SampledFunction indicator_positive() {
  return SampledFunction::analytic([](double x) { return cplx(x > 0 ? 1.0 : 0.0); }, nullptr, "1(0,inf)");
}
SampledFunction indicator_nonpositive() {
  return SampledFunction::analytic([](double x) { return cplx(x <= 0 ? 1.0 : 0.0); }, nullptr, "1(-inf,0]");
}

Rows run_verify(const ExperimentConfig& cfg) {
  const std::string E = "verify";
  const auto fns = rational_test_functions();
  const std::size_t trials = static_cast<std::size_t>(cfg.trials);
  const std::size_t units = cfg.dims.size() * trials;
  Rows rows = fan_out(units, [&](std::size_t u, Rows& out) {
    const int d = cfg.dims[u / trials];
    const std::size_t t = u % trials;
    const long long n = d;
    const std::string tag = "trial=" + std::to_string(t);
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(t % 3);
    guarded(out, E, "ensemble", n, [&] {
      const auto pair = ensemble(cfg.seed, d, k, stream_id("verify/d" + std::to_string(d), t));
      const Matrix defect = pair.h1().entries() - pair.h0().entries() - pair.factor().perturbation();
      out.push_back(annotate(residual_row(E, "factor_identity", max_abs(defect), 1e-12), n, tag));
      out.push_back(annotate(bound_row(E, "h0_spectrum_in_[-4,4]", pair.h0().eigenvalues().cwiseAbs().maxCoeff(),
                                       4.0, 0.0),
                             n, tag));
      for (const auto* h : {&pair.h0(), &pair.h1()}) {
        const Matrix rec =
            h->eigenvectors() * h->eigenvalues().cast<cplx>().asDiagonal() * h->eigenvectors().adjoint();
        out.push_back(annotate(residual_row(E, "eig_reconstruction", max_abs(rec - h->entries()), 1e-10), n, tag));
      }
      for (const auto& f : fns) {
        guarded(out, E, "birman_solomyak/" + f.name(), n, [&] {
          const auto bs = doi::birman_solomyak_residual(pair, f, doi::DiagonalRule::derivative);
          out.push_back(annotate(residual_row(E, "birman_solomyak/" + f.name(), bs.residual, 1e-9), n, tag));
        });
      }
      guarded(out, E, "doi_constant_symbol", n, [&] {
        const Matrix d1 = doi::doi_apply(pair, doi::SchurSymbol::constant(1.0)).matrix;
        out.push_back(annotate(
            residual_row(E, "doi_constant_symbol", doi::relative_residual(pair.factor().perturbation(), d1), 1e-12), n,
            tag));
      });
      guarded(out, E, "product_form", n, [&] {
        const auto& f = fns[2];
        for (const auto& [phi0, phi1] : {std::pair{indicator_nonpositive(), indicator_positive()},
                                         std::pair{indicator_positive(), indicator_positive()},
                                         std::pair{named_function("gauss"), named_function("sech")}}) {
          const auto pf = doi::product_form_check(pair, f, phi0, phi1);
          const std::string name = "product_form/" + phi0.name() + "," + phi1.name();
          out.push_back(annotate(residual_row(E, name + "/identity", pf.identity_residual, 1e-9), n, tag));
          out.push_back(annotate(residual_row(E, name + "/doi", pf.doi_residual, 1e-9), n, tag));
        }
      });
    });
    guarded(out, E, "quasicommutator", n, [&] {
      const auto qp = quasi_ensemble(cfg.seed, d, k, stream_id("verify/quasi/d" + std::to_string(d), t));
      for (std::size_t i : {0u, 2u, 9u}) {
        const auto rep = doi::quasicommutator(qp, fns[i]);
        out.push_back(annotate(residual_row(E, "quasicommutator/" + fns[i].name(), rep.residual, 1e-9), n, tag));
      }
    });
    if (t != 0) return;
    guarded(out, E, "hankel_identity", n, [&] {
      const std::size_t nn = 2 * static_cast<std::size_t>(d);
      const UniformGrid grid(0.0, kTwoPi * static_cast<double>(nn - 1) / static_cast<double>(nn), nn);
      const auto proj = divdiff::hardy_projections(divdiff::hilbert_transform(
          divdiff::HilbertVariant::periodic_multiplier, nn, grid));
      for (const auto& f : {named_function("exp_i"), fns[2], fns[9]}) {
        for (double p : {0.5, 1.0, 2.0, 3.0}) {
          const auto rep = divdiff::hankel_schatten_identity_check(f, proj, grid, p);
          auto row = annotate(residual_row(E, "hankel_identity/" + f.name(), rep.residual, 1e-9),
                              static_cast<long long>(nn));
          row.p = p;
          out.push_back(row);
        }
      }
    });
    guarded(out, E, "kato_interval", n, [&] {
      const auto m = MultOpModel::random(-4.0, 4.0, static_cast<std::size_t>(d), 2, 2, cfg.seed,
                                         stream_id("verify/model/d" + std::to_string(d), t));
      out.push_back(annotate(equality_row(E, "kato_interval_vs_block_max", smoothness::kato_norm_interval(m).value,
                                          m.max_block_norm(spectral::SchattenIndex::infinity()), 1e-10),
                             n));
    });
  });
  return rows;
}

struct ModelShape {
  double x_min = -8, x_max = 8;
  std::size_t cells = 64;
  Eigen::Index h = 2, k = 2;
};

ModelShape model_shape(const std::string& spec) {
  const ParsedSpec s = parse_spec(spec);
  if (s.kind != "random") throw ConfigError("model: the sweep needs a random model, got '" + s.kind + "'");
  ModelShape m;
  for (const auto& [key, v] : s.params) {
    const double x = std::stod(v);
    if (key == "xmin") m.x_min = x;
    else if (key == "xmax") m.x_max = x;
    else if (key == "cells") m.cells = static_cast<std::size_t>(x);
    else if (key == "h") m.h = static_cast<Eigen::Index>(x);
    else if (key == "k") m.k = static_cast<Eigen::Index>(x);
    else if (key != "seed") throw ConfigError("model: unknown key '" + key + "'");
  }
  return m;
}

// Symbol for sweep trial t: dense Gaussian, rank one, or a divided difference.
doi::SchurSymbol sweep_symbol(const ModelShape& shape, std::uint64_t seed, std::size_t t) {
  Philox4x64 rng(seed, stream_id("sweep/symbol", t));
  const double dx = (shape.x_max - shape.x_min) / static_cast<double>(shape.cells);
  auto index = [shape, dx](double x) {
    const auto i = static_cast<long>(std::floor((x - shape.x_min) / dx));
    return static_cast<Eigen::Index>(std::clamp<long>(i, 0, static_cast<long>(shape.cells) - 1));
  };
  const Eigen::Index m = static_cast<Eigen::Index>(shape.cells);
  switch (t % 3) {
    case 0: {
      const Matrix a = random_complex_gaussian(rng, m, m);
      return doi::SchurSymbol::kernel([a, index](double x, double y) { return a(index(x), index(y)); },
                                      "gaussian#" + std::to_string(t));
    }
    case 1: {
      const Matrix u = random_complex_gaussian(rng, m, 1);
      const Matrix v = random_complex_gaussian(rng, m, 1);
      return doi::SchurSymbol::kernel(
          [u, v, index](double x, double y) { return u(index(x), 0) * std::conj(v(index(y), 0)); },
          "rank_one#" + std::to_string(t));
    }
    default: {
      const auto fns = rational_test_functions();
      return doi::SchurSymbol::divided_difference(fns[(t / 3) % fns.size()], doi::DiagonalRule::derivative);
    }
  }
}

Rows run_sweep(const ExperimentConfig& cfg) {
  const std::string E = "sweep";
  const ModelShape shape = model_shape(cfg.model);
  return fan_out(static_cast<std::size_t>(cfg.trials), [&](std::size_t t, Rows& out) {
    const long long n = static_cast<long long>(shape.cells) * shape.h;
    guarded(out, E, "doi_holder_bound", n, [&] {
      const auto g0 = MultOpModel::random(shape.x_min, shape.x_max, shape.cells, shape.h, shape.k, cfg.seed,
                                          stream_id("sweep/g0", t));
      const auto g1 = MultOpModel::random(shape.x_min, shape.x_max, shape.cells, shape.h, shape.k, cfg.seed,
                                          stream_id("sweep/g1", t));
      const doi::SurrogatePair pair(g0, g1);
      const auto sym = sweep_symbol(shape, cfg.seed, t);
      for (const auto& tr : cfg.triples) {
        const auto rep = doi::doi_norm_bound_check(pair, sym, tr.p, tr.q, tr.r, cfg.tol_disc);
        auto row = annotate(bound_row(E, "doi_holder_bound", rep.lhs, rep.rhs, cfg.tol_disc), n,
                            sym.name() + " trial=" + std::to_string(t) + " smooth_q=" + fmt(rep.smooth_q) +
                                " smooth_r=" + fmt(rep.smooth_r) + " symbol_norm=" + fmt(rep.symbol_norm));
        row.p = tr.p;
        row.q = tr.q;
        row.r = tr.r;
        out.push_back(row);
      }
    });
  });
}

funcspace::DyadicWindow besov_window(const ExperimentConfig& cfg, const UniformGrid& grid, int default_min,
                                     std::string& note) {
  const int nyq = funcspace::nyquist_band_limit(grid);
  int j_max = cfg.j_max.value_or(nyq);
  if (j_max > nyq) {
    note = "j_max clamped from " + std::to_string(j_max) + " to the Nyquist limit " + std::to_string(nyq);
    j_max = nyq;
  }
  const int j_min = std::min(cfg.j_min.value_or(default_min), j_max);
  return funcspace::dyadic_window_build(j_min, j_max);
}

Rows run_besov(const ExperimentConfig& cfg) {
  const std::string E = "besov";
  const UniformGrid grid = *cfg.grid;
  std::string note;
  const auto window = besov_window(cfg, grid, -8, note);
  note += (note.empty() ? "" : "; ") + std::string("window=") + window.hash();
  const std::size_t np = cfg.p_values.size();
  return fan_out(cfg.functions.size() * np, [&](std::size_t u, Rows& out) {
    const std::string& spec = cfg.functions[u / np];
    const double p = cfg.p_values[u % np];
    const long long n = static_cast<long long>(grid.n);
    guarded(out, E, "besov_norm/" + spec, n, [&] {
      const auto f = make_function(spec);
      const auto s = SampledFunction::samples(grid, f.sample(grid), spec);
      const auto res = funcspace::besov_norm(s, p, window);
      auto row = annotate(value_row(E, "besov_norm/" + spec, res.norm), n, note);
      row.p = p;
      out.push_back(row);
    });
  });
}

Rows run_bmo(const ExperimentConfig& cfg) {
  const std::string E = "bmo";
  const UniformGrid grid = *cfg.grid;
  return fan_out(cfg.functions.size(), [&](std::size_t u, Rows& out) {
    const std::string& spec = cfg.functions[u];
    const long long n = static_cast<long long>(grid.n);
    guarded(out, E, "bmo/" + spec, n, [&] {
      const auto f = make_function(spec);
      const auto s = SampledFunction::samples(grid, f.sample(grid), spec);
      out.push_back(annotate(value_row(E, "mean_oscillation/" + spec, funcspace::bmo_mean_oscillation(s)), n));
      if (grid.n > 4096) {
        out.push_back(annotate(value_row(E, "kernel_estimate/" + spec, kNaN), n, "skipped: N > 4096"));
        out.back().pass = true;
        return;
      }
      const double k1 = divdiff::bmo_norm_via_kernel(f, grid);
      out.push_back(annotate(value_row(E, "kernel_estimate/" + spec, k1), n));
      const UniformGrid fine(grid.x_min, grid.x_max, 2 * grid.n);
      if (fine.n <= 4096) {
        const double k2 = divdiff::bmo_norm_via_kernel(f, fine);
        auto row = annotate(value_row(E, "kernel_estimate_refined/" + spec, k2), static_cast<long long>(fine.n));
        row.rhs = k1;
        row.ratio = k1 > 0 ? k2 / k1 : kNaN;
        out.push_back(row);
      }
    });
  });
}

void sharpness_rows(Rows& out, const std::string& E, const doi::SharpnessReport& rep, const std::string& name,
                    double tol_disc) {
  const long long n = static_cast<long long>(rep.n);
  out.push_back(annotate(residual_row(E, "commutator/" + name, rep.commutator_residual, 1e-12), n));
  out.push_back(annotate(residual_row(E, "involution/" + name, rep.involution_residual, 1e-10), n));
  auto ratio = annotate(equality_row(E, "norm_ratio/" + name, rep.d_norm, 2.0 * rep.bmo_estimate, 0.2), n,
                        "tail=" + fmt(rep.tail_fraction));
  if (rep.excluded) {
    ratio.pass = true;
    ratio.notes += "; excluded: tail fraction >= 0.2";
  }
  out.push_back(ratio);
  // A = ||G0||_Smooth ||G1||_Smooth = 1/pi for this pair, so 2 pi A = 2.
  out.push_back(annotate(bound_row(E, "bmo_bound/" + name, rep.d_norm, 2.0 * rep.bmo_estimate, tol_disc), n,
                         "A=1/pi"));
}

Rows run_sharpness(const ExperimentConfig& cfg) {
  const std::string E = "sharpness";
  const UniformGrid grid = *cfg.grid;
  const UniformGrid fine(grid.x_min, grid.x_max, 2 * grid.n);
  Rows rows;
  for (const auto& g : {grid, fine}) {
    std::optional<doi::SharpnessContext> ctx;
    guarded(rows, E, "context", static_cast<long long>(g.n), [&] { ctx.emplace(g); });
    if (!ctx) continue;
    Rows part = fan_out(cfg.functions.size(), [&](std::size_t u, Rows& out) {
      const std::string& spec = cfg.functions[u];
      guarded(out, E, "sharpness/" + spec, static_cast<long long>(g.n), [&] {
        sharpness_rows(out, E, doi::sharpness_pair(*ctx, make_function(spec)), spec, cfg.tol_disc);
      });
    });
    for (auto& r : part) rows.push_back(std::move(r));
  }
  return rows;
}

Rows run_falpha(const ExperimentConfig& cfg) {
  const std::string E = "falpha";
  const UniformGrid grid = *cfg.grid;
  std::string note;
  const auto window = besov_window(cfg, grid, 0, note);
  const int j_lo = 8;
  const int j_hi = window.j_max() - 3;
  Rows rows = fan_out(cfg.alpha_values.size(), [&](std::size_t u, Rows& out) {
    const double alpha = cfg.alpha_values[u];
    const long long n = static_cast<long long>(grid.n);
    const std::string name = "alpha=" + fmt(alpha);
    guarded(out, E, "besov_slope/" + name, n, [&] {
      if (j_hi - j_lo < 3) throw NumericalRejection("grid too coarse for a slope fit over j >= 8");
      const auto spec = funcspace::FAlphaSpec::make(alpha, 1.0, 0.0);
      const auto s = funcspace::f_alpha_sample(spec, grid);
      for (double p : cfg.p_values) {
        const auto res = funcspace::besov_norm(s, p, window);
        const double slope = funcspace::loglog_slope(res.bands, j_lo, j_hi);
        auto row = annotate(near_row(E, "besov_slope/" + name, slope, -alpha * p, 0.3), n,
                            "fit j in [" + std::to_string(j_lo) + "," + std::to_string(j_hi) + "]");
        row.p = p;
        out.push_back(row);
        // Terms summable iff the decay beats 1/j, i.e. iff alpha p > 1.
        ResultRow thr = value_row(E, "threshold/" + name, slope);
        thr.n = n;
        thr.p = p;
        thr.rhs = -1.0;
        if (std::abs(alpha * p - 1.0) < 0.3) {
          thr.notes = "boundary case, not judged";
        } else {
          thr.pass = (slope < -1.0) == (alpha * p > 1.0);
          thr.notes = alpha * p > 1.0 ? "expect summable" : "expect divergent";
        }
        out.push_back(thr);
      }
    });
    for (const auto& [ap, am, tol, label] : {std::tuple{cplx(1.0), cplx(0.0), 0.10, "jump"},
                                             std::tuple{cplx(1.0), cplx(1.0), 0.15, "even"}}) {
      const std::string check = std::string("fourier_asymptotic/") + label + "/" + name;
      guarded(out, E, check, std::nullopt, [&] {
        const auto spec = funcspace::FAlphaSpec::make(alpha, ap, am);
        const auto table = funcspace::f_alpha_fourier_asymptotics(spec, {1e3, 1e4, 1e5, 1e6});
        for (const auto& r : table) {
          auto row = value_row(E, check, std::abs(r.ratio));
          row.rhs = 1.0;
          row.ratio = std::abs(r.ratio);
          row.notes = "t=" + fmt(r.t) + " ratio=" + fmt(r.ratio.real()) + (std::signbit(r.ratio.imag()) ? "" : "+") +
                      fmt(r.ratio.imag()) + "i quad_err=" + fmt(r.error);
          if (r.t >= 1e6) {
            row.tol = tol;
            row.pass = std::abs(std::abs(r.ratio) - 1.0) <= tol;
          }
          out.push_back(row);
        }
      });
    }
  });
  if (!note.empty())
    for (auto& r : rows) r.notes += "; " + note;
  return rows;
}

Rows run_smoothness(const ExperimentConfig& cfg) {
  const std::string E = "smoothness";
  Rows out;
  std::optional<MultOpModel> model;
  guarded(out, E, "model", std::nullopt, [&] { model.emplace(make_model(cfg.model, cfg.seed)); });
  if (!model) return out;
  const long long n = static_cast<long long>(model->cells()) * model->h_dim();
  guarded(out, E, "kato_interval", n, [&] {
    out.push_back(annotate(equality_row(E, "kato_interval_vs_block_max", smoothness::kato_norm_interval(*model).value,
                                        model->max_block_norm(spectral::SchattenIndex::infinity()), 1e-10),
                           n));
  });
  for (double p : cfg.p_values) {
    guarded(out, E, "smooth_p", n, [&] {
      ResultRow row;
      if (p >= 2) {
        row = equality_row(E, "smooth_p_vs_block_max", smoothness::smooth_p_norm(*model, p).value,
                           model->max_block_norm(p), 1e-10);
      } else {
        const auto b = smoothness::smooth_p_norm_definition(*model, p);
        row = value_row(E, "smooth_p_definition", b.lower);
        row.rhs = b.upper;
        row.ratio = b.upper > 0 ? b.lower / b.upper : kNaN;
        row.notes = "lower/upper bracket, iterations=" + std::to_string(b.iterations);
      }
      row.p = p;
      out.push_back(annotate(row, n));
    });
  }
  guarded(out, E, "resolvent_forms", n, [&] {
    const auto rep = smoothness::smoothness_report(*model, {});
    const std::string note = "c1_err=" + fmt(rep.c1_error) + " c2_err=" + fmt(rep.c2_error);
    out.push_back(annotate(equality_row(E, "c1_vs_c3", rep.c1, rep.c3, 0.05), n, note));
    out.push_back(annotate(equality_row(E, "c2_vs_c3", rep.c2, rep.c3, 0.05), n, note));
  });
  for (std::size_t t = 0; t < static_cast<std::size_t>(std::max(cfg.trials, 3)); ++t) {
    guarded(out, E, "bessel", n, [&] {
      Philox4x64 rng(cfg.seed, stream_id("smoothness/bessel", t));
      const auto m = static_cast<Eigen::Index>(model->cells());
      const Eigen::Index cols = std::max<Eigen::Index>(1, m / 2);
      const Matrix x = random_complex_gaussian(rng, m, cols);
      Eigen::HouseholderQR<Matrix> qr(x);
      const Matrix psi = qr.householderQ() * Matrix::Identity(m, cols) / std::sqrt(model->dx());
      const Vector u = random_complex_gaussian(rng, m * model->h_dim(), 1).col(0);
      const auto rep = smoothness::bessel_property_check(*model, u, psi);
      out.push_back(
          annotate(bound_row(E, "bessel", rep.lhs, rep.rhs, 1e-9), n, "gram_defect=" + fmt(rep.gram_defect)));
    });
  }
  return out;
}

Rows run_interpolation(const ExperimentConfig& cfg) {
  const std::string E = "interpolation";
  Rows out;
  std::optional<MultOpModel> model;
  guarded(out, E, "model", std::nullopt, [&] { model.emplace(make_model(cfg.model, cfg.seed)); });
  if (!model) return out;
  const long long n = static_cast<long long>(model->cells());
  const std::vector<double> ys{-3.0, -1.0, -0.25, 0.0, 0.5, 2.0};
  for (double q : cfg.q_values) {
    guarded(out, E, "interpolation", n, [&] {
      const auto fam = smoothness::interpolation_family(*model, q);
      std::vector<cplx> zs;
      for (double x : {0.0, 0.25, 0.5, 0.75, 1.0})
        for (double y : ys) zs.emplace_back(x, y);
      ResultRow rows[] = {residual_row(E, "reconstruction", fam.reconstruction_residual(), 1e-10),
                          bound_row(E, "unit_bound", fam.unit_bound(ys), 1.0, 1e-12),
                          residual_row(E, "endpoint_equality", fam.endpoint_equality(ys), 1e-10),
                          bound_row(E, "strip_bound", fam.strip_bound_ratio(zs), 1.0, 1e-10)};
      for (auto& r : rows) {
        r.q = q;
        out.push_back(annotate(r, n));
      }
    });
  }
  return out;
}

}  // namespace

std::string version_string() { return OPDIFF_VERSION; }

ResultRecord run(const ExperimentConfig& config) {
  const ExperimentConfig cfg = config.resolved();
  cfg.validate();
  ResultRecord rec;
  rec.experiment = experiment_name(cfg.experiment);
  rec.config_json = cfg.canonical_json();
  rec.config_hash = cfg.hash();
  rec.version = version_string();
  const auto start = std::chrono::steady_clock::now();
  switch (cfg.experiment) {
    case Experiment::verify: rec.rows = run_verify(cfg); break;
    case Experiment::sweep: rec.rows = run_sweep(cfg); break;
    case Experiment::besov: rec.rows = run_besov(cfg); break;
    case Experiment::bmo: rec.rows = run_bmo(cfg); break;
    case Experiment::sharpness: rec.rows = run_sharpness(cfg); break;
    case Experiment::falpha: rec.rows = run_falpha(cfg); break;
    case Experiment::smoothness: rec.rows = run_smoothness(cfg); break;
    case Experiment::interpolation: rec.rows = run_interpolation(cfg); break;
  }
  rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace opdiff::lab
