#pragma once

#include <functional>

#include "jpotts/real.hpp"

namespace jpotts {

// Tanh-sinh quadrature of f over the finite interval [a,b] at the current
// working precision. Doubles the node density per level until two successive
// levels agree to ~10^(-digits); integrable endpoint singularities are fine.
// err_out receives the last level-to-level difference, evals the node count.
Real tanh_sinh_1d(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                  int digits, Real* err_out = nullptr, long* evals = nullptr);

}  // namespace jpotts
