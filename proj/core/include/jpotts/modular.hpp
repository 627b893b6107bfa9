#pragma once

#include <vector>

#include "jpotts/eval.hpp"

namespace jpotts {

// Truncated q-expansion with exact integer coefficients: the series
//   q^frac_exp * sum_j c[j] q^j,   coefficients valid for j <= order.
struct QSeries {
  mpq_class frac_exp;
  std::vector<mpz_class> c;
  long order = 0;

  // Product, truncated to the smaller validity order.
  QSeries mul(const QSeries& other) const;
  QSeries pow_u(unsigned e) const;

  // Euler product prod_{n>=1} (1 - q^{scale n}) up to q^order: sparse
  // +-1 coefficients at generalized pentagonal offsets scale*j(3j-1)/2.
  static QSeries euler_product(long scale, long order);

  // eta(q^scale) = q^{scale/24} euler_product(scale).
  static QSeries eta(long scale, long order);
};

// Dedekind eta at a real nome, eta(q) = q^{1/24} prod (1-q^n). order <= 0
// picks the truncation from the requested digits. The relative tail bound
// exp(q^{N+1}/(1-q)^2) - 1 enters err_bound.
EvalResult eta_q(const Real& q, long order, const PrecisionConfig& prec);

// u(q) = m + 1/m with m = (2^{1/4} eta(q) eta(q^4)/eta(q^2)^2)^12.
EvalResult u_of_q(const Real& q, const PrecisionConfig& prec);

// Two-dimensional lattice expansion of J(u(e^{-2 pi v})), v >= 1/2:
//   -3 log 2 + (15 v/pi^3) S1 + (48 v/pi^3) S2,
// S1 over (n,k) != (0,0) of (3n^2 - (2v)^2 k^2)/(n^2 + (2v)^2 k^2)^3,
// S2 over all odd pairs of the same expression. Square shells |n|,|k| <= R
// with Richardson extrapolation of the O(1/R^2) tail.
struct LatticeSumSpec {
  double v = 1.0;
  long radius = 400;
  bool extrapolate = true;
};
EvalResult j_lattice(const LatticeSumSpec& spec);

// Exact Bernoulli number B_n.
const mpq_class& bernoulli(unsigned n);

// Hurwitz zeta(s, a) for integer s >= 2 and rational a in (0,1], by
// Euler-Maclaurin with exact Bernoulli coefficients.
Real hurwitz_zeta(long s, const mpq_class& a, const PrecisionConfig& prec,
                  long* terms_used = nullptr);

// Dirichlet L-series for the quadratic characters mod 4 and mod 3
// (modulus_tag in {-4, -3}), s >= 2, via Hurwitz zeta differences.
EvalResult dirichlet_l(int modulus_tag, long s, const PrecisionConfig& prec);

// Integer q-expansion coefficients a_1..a_nmax of eta(2 tau)^3 eta(6 tau)^3.
std::vector<mpz_class> eta23_63_coefficients(long n_max);

// Measured Fricke reflection data for f(iy) under y -> 1/(12 y).
struct FrickeCheck {
  Real eigenvalue;   // rounded sign, +1 or -1
  Real deviation;    // worst |measured - rounded| over the probe points
};

// L(f,3) for f = eta(2 tau)^3 eta(6 tau)^3 through the Mellin integral
// split at 1/sqrt(12); the reflection eigenvalue is measured numerically
// before use and a ReflectionError is raised if it fails to hold.
EvalResult l_eta_product_3(const PrecisionConfig& prec, FrickeCheck* check = nullptr);

enum class SpecialT { two, five_halves };

// Closed-form special values:
//   J(2)   = (8/pi) L_{-4}(2) - 3 log 2
//   J(5/2) = (24 sqrt3/pi^3) L(eta^3(2t)eta^3(6t), 3) + (15 sqrt3/(4 pi)) L_{-3}(2) - 3 log 2
EvalResult j_special(SpecialT which, const PrecisionConfig& prec);

}  // namespace jpotts
