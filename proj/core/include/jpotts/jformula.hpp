#pragma once

#include "jpotts/eval.hpp"

namespace jpotts {

// Right endpoint of the real validity interval, (sqrt(2)-1)^2 = 3 - 2 sqrt(2),
// at working precision. There the third hypergeometric argument
// 16 a (1-a)^2 / (1+a)^4 equals 1 exactly.
Real alpha_star();

// Image of alpha_star under the parameter map: t = 2.0802...; the 5F4
// representation of J holds on the real ray t >= validity_t_min().
Real validity_t_min();

// t = sqrt(4a(1-a)) + 1/sqrt(4a(1-a)), principal square root.
Cplx alpha_to_t(const Cplx& alpha);
Real alpha_to_t(const Real& alpha);

// Inverse branch with a in (0, (sqrt(2)-1)^2]: sqrt(w) = (t - sqrt(t^2-4))/2,
// a = (1 - sqrt(1-w))/2. Requires t >= validity_t_min().
Real t_to_alpha(const Real& t);

enum class AlphaRegion { real_valid, complex_small, invalid };

struct AlphaPoint {
  Cplx alpha;
  Cplx t;
  AlphaRegion region = AlphaRegion::invalid;

  static AlphaPoint make(const Cplx& alpha);
  static AlphaPoint make(const Real& alpha);
};

// The 5F4 representation of J(t(alpha)):
//   -1/2 log(4a(1-a)^19(1+a)^12)
//   - (11/4) a(1-a)   5F4(3/2,3/2,3/2,1,1;2,2,2,2; 4a(1-a))
//   - (7a/4)/(1-a)^2  5F4(3/2,3/2,3/2,1,1;2,2,2,2; -4a/(1-a)^2)
//   + (9a(1-a)^2/4)/(1+a)^4 5F4(5/4,3/2,7/4,1,1;2,2,2,2; 16a(1-a)^2/(1+a)^4)
// err_bound accumulates the component series bounds.
EvalResult j_hyper(const AlphaPoint& pt, const PrecisionConfig& prec);

// dt/dalpha = 2 (2a-1)^3 / (4a(1-a))^(3/2).
Real dt_dalpha(const Real& alpha);

// |LHS - RHS| of the differentiated identity: LHS is the closed-form Green
// function times dt/dalpha, RHS the stated 3F2 combination. alpha strictly
// inside (0, (sqrt(2)-1)^2).
Real presumed_equality_residual(const Real& alpha, const PrecisionConfig& prec);

}  // namespace jpotts
