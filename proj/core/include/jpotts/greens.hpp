#pragma once

#include "jpotts/eval.hpp"

namespace jpotts {

// Closed form of the lattice Green function:
//   G(t) = (1/t) (1 - 4/t^2)^(-1/4) [2F1(1/8,5/8;1;4/t^2)]^2,
// valid for t off the real segment [-2,2].
EvalResult g_closed(const Cplx& t, const PrecisionConfig& prec);
EvalResult g_closed(const Real& t, const PrecisionConfig& prec);

}  // namespace jpotts
