#pragma once

#include <functional>
#include <string>

#include "opdiff/divdiff/divided_difference.hpp"
#include "opdiff/smoothness/multop_model.hpp"
#include "opdiff/spectral/pair.hpp"

namespace opdiff::doi {

using divdiff::DiagonalRule;
using funcspace::SampledFunction;
using spectral::HermitianOperator;
using spectral::OperatorPair;

enum class SymbolKind { kernel, divided_difference, constant };

// Kernel a(x, y) of a double operator integral.
class SchurSymbol {
 public:
  using Kernel = std::function<cplx(double, double)>;

  // Points closer than this (relative) use the diagonal rule under the derivative rule.
  static constexpr double kCoincidenceDerivative = 1e-6;
  // Same for the symmetric-difference rule, which is only meant for exact coincidences.
  static constexpr double kCoincidenceExact = 1e-12;

  static SchurSymbol constant(cplx c);
  static SchurSymbol kernel(Kernel k, std::string name);
  // (f(x) - f(y)) / (x - y), with f'((x+y)/2) or a symmetric difference of step `step` on the diagonal.
  static SchurSymbol divided_difference(SampledFunction f, DiagonalRule rule, double step = 1e-3);

  SymbolKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::uint64_t hash() const;

  // Throws NumericalRejection naming (x, y) when the value is not finite.
  cplx operator()(double x, double y) const;

  // b(x, y) = conj(a(y, x)).
  SchurSymbol adjoint() const;

 private:
  SymbolKind kind_ = SymbolKind::constant;
  Kernel eval_;
  std::string name_;
};

struct DoiResult {
  Matrix matrix;
  std::uint64_t symbol_hash = 0;
  std::uint64_t pair_hash = 0;
};

// V1 [a(lambda_i, mu_j) o (V1* G1* G0 V0)] V0*.
DoiResult doi_apply(const HermitianOperator& h0, const HermitianOperator& h1, const Matrix& g0, const Matrix& g1,
                    const SchurSymbol& symbol);
DoiResult doi_apply(const OperatorPair& pair, const SchurSymbol& symbol);

// Shared relative residual with the documented floor.
inline constexpr double kEpsFloor = 1e-14;
double relative_residual(const Matrix& reference, const Matrix& candidate);

struct BirmanSolomyakReport {
  double residual = 0.0;
  double d_norm = 0.0;    // ||f(H1) - f(H0)||_F
  double doi_norm = 0.0;  // ||DOI(f_check)||_F
};

BirmanSolomyakReport birman_solomyak_residual(const OperatorPair& pair, const SampledFunction& f, DiagonalRule rule);

// Two multiplication models on the same cells, standing in for (H0, G0) and (H1, G1) with H0 = H1.
struct SurrogatePair {
  smoothness::MultOpModel g0;
  smoothness::MultOpModel g1;

  SurrogatePair(smoothness::MultOpModel m0, smoothness::MultOpModel m1);
  spectral::HermitianOperator h() const { return g0.multiplication_operator(); }
};

// Delta x [a(x_i, x_j)]: the symbol as an integral operator on the cell grid.
Matrix symbol_matrix(const smoothness::MultOpModel& model, const SchurSymbol& symbol);

struct DoiBoundReport {
  double p = 0.0, q = 0.0, r = 0.0;
  double lhs = 0.0;       // ||DOI(a)||_p
  double symbol_norm = 0.0;  // ||a||_p on the grid
  double smooth_q = 0.0;  // ||G0||_{Smooth_q}, certified upper value
  double smooth_r = 0.0;  // ||G1||_{Smooth_r}, certified upper value
  double a_qr = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double tol_disc = 0.1;
  bool pass = false;
};

// Rejects triples with |1/p - 1/q - 1/r| > 1e-12 (q or r may be infinite).
void check_holder_triple(double p, double q, double r);

DoiBoundReport doi_norm_bound_check(const SurrogatePair& pair, const SchurSymbol& symbol, double p, double q, double r,
                                    double tol_disc = 0.1);

// A = ||G0||_Smooth ||G1||_Smooth on the surrogate.
double surrogate_constant_a(const SurrogatePair& pair);

}  // namespace opdiff::doi
