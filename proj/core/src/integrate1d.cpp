#include "jpotts/integrate1d.hpp"

#include <cmath>

#include "jpotts/errors.hpp"

namespace jpotts {

namespace {

// One node of the map x = tanh((pi/2) sinh(tau)) on [a,b]. The offset from
// the near endpoint is formed from exp(-pi sinh(tau)), so nodes never land
// on a or b even when the offset drops far below working precision.
struct TsNode {
  Real point;
  Real weight;
};

TsNode ts_node(const Real& a, const Real& b, const Real& half_width, const Real& half_pi,
               const Real& tau, bool lower_wing) {
  Real sh = Real::make(), ch = Real::make();
  sinh_cosh(sh, ch, tau);
  Real x = half_pi * sh;
  Real em = exp(ldexp(abs(x), 1) * Real(-1.0));
  Real off = ldexp(em / (Real(1) + em), 1);  // 1 - |tanh(x)|
  TsNode node;
  node.point = lower_wing ? a + half_width * off : b - half_width * off;
  Real chx = cosh(x);
  node.weight = half_pi * ch / (chx * chx);
  return node;
}

}  // namespace

Real tanh_sinh_1d(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                  int digits, Real* err_out, long* evals) {
  // Nodes are generated at roughly doubled precision so the offsets from the
  // endpoints stay resolvable down to tol^2; that keeps inverse-square-root
  // endpoint singularities integrable to the full requested accuracy.
  PrecisionScope scope(2 * digits + 25);
  const Real half_pi = ldexp(const_pi(), -1);
  const Real half_width = ldexp(b - a, -1);
  const Real tol = pow10(-digits) * (Real(1) + abs(half_width));
  // Wings extend until several consecutive contributions drop below this.
  const Real node_tol = pow10(-(digits + 10));
  const double tau_cap = 7.0;

  long used = 0;
  Real prev(0);
  Real value(0);
  Real diff(0);
  for (int level = 3; level <= 13; ++level) {
    const double hd = 1.0 / static_cast<double>(1L << level);
    const Real h(hd);
    const long jcap = static_cast<long>(tau_cap / hd) + 1;

    Real sum(0);
    {
      TsNode n0 = ts_node(a, b, half_width, half_pi, Real(0), false);
      sum += n0.weight * f(n0.point);
      ++used;
    }
    for (int wing = 0; wing < 2; ++wing) {
      int consecutive_small = 0;
      for (long j = 1; j <= jcap; ++j) {
        TsNode n = ts_node(a, b, half_width, half_pi, h * j, wing == 0);
        if (!(n.point > a && n.point < b)) break;  // offset rounded away
        Real contrib = n.weight * f(n.point);
        sum += contrib;
        ++used;
        if (abs(contrib) < node_tol * (Real(1) + abs(sum))) {
          if (++consecutive_small >= 3) break;
        } else {
          consecutive_small = 0;
        }
      }
    }
    value = sum * (half_width * h);
    if (level > 3) {
      diff = abs(value - prev);
      if (diff < tol) break;
    }
    prev = value;
  }
  if (err_out) *err_out = diff;
  if (evals) *evals = used;
  return value;
}

}  // namespace jpotts
