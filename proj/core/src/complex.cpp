#include "jpotts/complex.hpp"

namespace jpotts {

Cplx sqrt(const Cplx& z) {
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) return Cplx(sqrt(z.re), Real(0));
    return Cplx(Real(0), sqrt(-z.re));
  }
  // w = sqrt((|z| + |re|)/2); the other component is |im|/(2w).
  Real w = sqrt(ldexp(abs(z) + abs(z.re), -1));
  Real other = ldexp(abs(z.im) / w, -1);
  if (z.re.sign() >= 0) {
    return Cplx(w, z.im.sign() >= 0 ? other : -other);
  }
  return Cplx(other, z.im.sign() >= 0 ? w : -w);
}

Cplx log(const Cplx& z) { return Cplx(log(abs(z)), atan2(z.im, z.re)); }

Cplx exp(const Cplx& z) {
  Real s = Real::make(), c = Real::make();
  sin_cos(s, c, z.im);
  Real m = exp(z.re);
  return Cplx(m * c, m * s);
}

Cplx pow(const Cplx& z, const Real& y) { return exp(Cplx(y) * log(z)); }

}  // namespace jpotts
