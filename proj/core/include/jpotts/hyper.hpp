#pragma once

#include <array>
#include <utility>
#include <vector>

#include "jpotts/eval.hpp"

namespace jpotts {

// Parameters and argument of a generalized hypergeometric series pFq with
// p = q + 1. Parameters are exact rationals so that Pochhammer arithmetic
// never rounds.
struct HyperSeriesSpec {
  std::vector<mpq_class> upper;
  std::vector<mpq_class> lower;
  Cplx argument;

  static HyperSeriesSpec f21(mpq_class a, mpq_class b, mpq_class c, Cplx z);
  static HyperSeriesSpec f32(mpq_class a1, mpq_class a2, mpq_class a3, mpq_class b1, mpq_class b2,
                             Cplx z);
  static HyperSeriesSpec f43(std::array<mpq_class, 4> a, std::array<mpq_class, 3> b, Cplx z);
  static HyperSeriesSpec f54(std::array<mpq_class, 5> a, std::array<mpq_class, 4> b, Cplx z);

  // Throws DomainError on nonpositive-integer lower parameters or when
  // |upper| != |lower| + 1.
  void validate() const;

  // Sum(lower) - Sum(upper); the series at |z| = 1 converges iff positive,
  // with terms decaying like n^(-1-excess).
  mpq_class parameter_excess() const;

  // True when the upper parameters can be matched one-to-one with
  // lower ∪ {1} such that each upper <= its partner. Then every term ratio
  // is bounded by |z|, which makes the geometric tail majorant rigorous.
  bool ratios_dominated() const;
};

// Sums the series with an incremental exact-factor term recurrence.
// err_bound dominates the truncation tail (geometric majorant inside the
// unit disk, algebraic-decay majorant on |z| = 1) plus a roundoff allowance.
EvalResult pfq(const HyperSeriesSpec& spec, const PrecisionConfig& prec);

// |d/dz[z 5F4(2-s,3/2,1+s,1,1;2,2,2,2;z)] - (2/(s(1-s)z))(3F2(1-s,1/2,s;1,1;z)-1)|.
// The derivative side is summed as the equivalent 4F3(2-s,3/2,1+s,1;2,2,2;z).
Real deriv_5f4_identity_residual(const mpq_class& s, const Cplx& z, const PrecisionConfig& prec);

// Exact coefficient of z^n on either side of the same identity.
mpq_class deriv_identity_lhs_coeff(const mpq_class& s, unsigned long n);
mpq_class deriv_identity_rhs_coeff(const mpq_class& s, unsigned long n);

// Rising factorial (a)_n as an exact rational.
mpq_class pochhammer(const mpq_class& a, unsigned long n);

// Both sides of the quadratic-transformation chain
//   (1-4/t^2)^(-1/4) [2F1(1/8,5/8;1;4/t^2)]^2
//     = ((1+4a-4a^2)/(1-2a)) [2F1(1/2,1/2;1;a)]^2,
// with t induced by a through the usual parametrization. Valid for
// 0 < a <= (sqrt(2)-1)^2.
std::pair<Real, Real> erdelyi_quadratic_chain(const Real& alpha, const PrecisionConfig& prec);

// Absolute residuals of the three Clausen-type square identities:
//   3F2(1/2,1/2,1/2;1,1;4a(1-a))        = [2F1(1/2,1/2;1;a)]^2
//   3F2(1/2,1/2,1/2;1,1;-4a/(1-a)^2)    = (1-a) [2F1(1/2,1/2;1;a)]^2
//   3F2(1/4,1/2,3/4;1,1;16a(1-a)^2/(1+a)^4) = (1+a) [2F1(1/2,1/2;1;a)]^2
std::array<Real, 3> clausen_square_residuals(const Cplx& alpha, const PrecisionConfig& prec);

}  // namespace jpotts
