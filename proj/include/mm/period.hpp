#pragma once

#include <string>
#include <vector>

#include "mm/qchev.hpp"
#include "mm/ratfunc.hpp"

namespace mm {

struct PeriodSeries {
  std::vector<Q> coefficients;  // c_0 .. c_D
  std::vector<std::vector<Q>> trace;  // S_0 .. S_D
};

// Flat sections of theta S = M(q) S with M = D1 + q D2, S_0 = sigma_top.
PeriodSeries quantum_period(const ConnMatrix& M, int max_degree);
// Same recursion for matrices whose q^0 part has a diagonal (equivariant case):
// S_0 = sigma_top with exponent lambda = M0(top, top), then (d + lambda - M0) S_d = M1 S_{d-1}.
PeriodSeries quantum_period_shifted(const Matrix<Q>& M0, const Matrix<Q>& M1, int top, int max_degree);
// Split a matrix linear in q into its q^0 and q^1 parts; other symbols are rejected.
void split_linear_in_q(const Matrix<LaurentPoly>& M, Matrix<Q>& M0, Matrix<Q>& M1);

// Coefficient of q^d becomes c_d * hbar^{-c d}.
std::vector<LaurentPoly> hbar_rescale(const PeriodSeries& s, int coxeter, const std::string& hbar = "hbar");
// Recursion for theta S = (1/hbar) M S, solved over Q[hbar^{+-1}]; returns the top components.
std::vector<LaurentPoly> quantum_period_hbar(const ConnMatrix& M, int max_degree, const std::string& hbar = "hbar");

// Number of saturated chains in W^P from pi_P(w0 w0^P s_gamma) up to the top.
Q bruhat_path_count(const CosetReps& reps);

// sum_k p_k(q) theta^k, monic of order r.
struct ScalarOperator {
  std::vector<RatFunc> coefficients;  // p_0 .. p_r
  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  std::string str() const;
  bool operator==(const ScalarOperator& o) const { return coefficients == o.coefficients; }
};

ScalarOperator cyclic_scalar_operator(const Matrix<RatFunc>& M, const std::vector<RatFunc>& start);
ScalarOperator cyclic_scalar_operator(const Matrix<LaurentPoly>& M, const std::vector<Q>& start);
// Applies L to a truncated power series in q; returns coefficients of L(S) up to q^D.
std::vector<Q> apply_operator(const ScalarOperator& L, const std::vector<Q>& series);

struct D4Split {
  int plus = -1, minus = -1;  // indices of the two length-3 classes
  std::vector<Q> kernel_line;  // sigma3+ - sigma3-
  Matrix<Q> complement;  // columns: basis of the 7-dimensional complement
  Matrix<LaurentPoly> restricted;  // M on the complement, in that basis
};
D4Split d4_split(const ConnMatrix& M);

// Coefficients prod_{j<=k} 1/(j(j + 2h)).
PeriodSeries equivariant_bessel(const Q& h, int max_degree);
// Residual of (theta + h)^2 - (q + h^2) on the stripped series, one entry per q-power.
std::vector<Q> bessel_operator_residual(const PeriodSeries& s, const Q& h);

struct BesselReport {
  double y, nu;
  double I_nu, I_nu1, K_nu, K_nu1;
  double residual;
  bool ok;
};
double bessel_i_series(double nu, double y);
double bessel_k_quadrature(double nu, double y, double tol = 1e-12);
BesselReport bessel_numeric_checks(double y, double nu);

struct JacobianReport {
  bool symbolic_ok = false;  // critical-locus relation prod (x - h_i) = q
  bool matrix_ok = false;  // X^{n+1} - q on the P^n connection at h = 0
  bool equivariant_matrix_ok = false;  // prod (M - d_i) - q on the equivariant matrix
  LaurentPoly relation;
};
JacobianReport jacobian_pn_check(int n);

}  // namespace mm
