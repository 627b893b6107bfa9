#include "jpotts/real.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace jpotts {

namespace {
thread_local int g_digits = 30;
}

int working_digits() { return g_digits; }

void set_working_digits(int digits) {
  if (digits < 5) digits = 5;
  if (digits > 400) digits = 400;
  g_digits = digits;
}

mpfr_prec_t working_prec_bits() {
  // digits10 -> bits, plus a small fixed cushion.
  return static_cast<mpfr_prec_t>(std::ceil(g_digits * 3.3219280948873623)) + 16;
}

std::string Real::str(int digits) const {
  if (digits <= 0) digits = working_digits();
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

#define JPOTTS_UNARY(name, mpfr_fn)                       \
  Real name(const Real& x) {                              \
    Real r = Real::make();                                \
    mpfr_fn(r.get(), x.get(), MPFR_RNDN);                 \
    return r;                                             \
  }

JPOTTS_UNARY(abs, mpfr_abs)
JPOTTS_UNARY(sqrt, mpfr_sqrt)
JPOTTS_UNARY(log, mpfr_log)
JPOTTS_UNARY(log1p, mpfr_log1p)
JPOTTS_UNARY(exp, mpfr_exp)
JPOTTS_UNARY(expm1, mpfr_expm1)
JPOTTS_UNARY(sin, mpfr_sin)
JPOTTS_UNARY(cos, mpfr_cos)
JPOTTS_UNARY(sinh, mpfr_sinh)
JPOTTS_UNARY(cosh, mpfr_cosh)
JPOTTS_UNARY(tanh, mpfr_tanh)
JPOTTS_UNARY(asinh, mpfr_asinh)
JPOTTS_UNARY(atan, mpfr_atan)
JPOTTS_UNARY(gamma, mpfr_gamma)

#undef JPOTTS_UNARY

Real rootn(const Real& x, unsigned long k) {
  Real r = Real::make();
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

void sin_cos(Real& s, Real& c, const Real& x) {
  mpfr_sin_cos(s.get(), c.get(), x.get(), MPFR_RNDN);
}

void sinh_cosh(Real& s, Real& c, const Real& x) {
  mpfr_sinh_cosh(s.get(), c.get(), x.get(), MPFR_RNDN);
}

Real atan2(const Real& y, const Real& x) {
  Real r = Real::make();
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r = Real::make();
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long k) {
  Real r = Real::make();
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = Real::make();
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real agm(const Real& a, const Real& b) {
  Real r = Real::make();
  mpfr_agm(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real zeta(unsigned long s) {
  Real r = Real::make();
  mpfr_zeta_ui(r.get(), s, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real ldexp(const Real& x, long e) {
  Real r = Real::make();
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real const_pi() {
  Real r = Real::make();
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_log2() {
  Real r = Real::make();
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real const_catalan() {
  Real r = Real::make();
  mpfr_const_catalan(r.get(), MPFR_RNDN);
  return r;
}

Real pow10(long e) {
  Real r = Real::make();
  mpfr_set_si(r.get(), 10, MPFR_RNDN);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

}  // namespace jpotts
