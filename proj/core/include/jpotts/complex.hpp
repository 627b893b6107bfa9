#pragma once

#include "jpotts/real.hpp"

namespace jpotts {

// Minimal complex type over Real. Principal branches throughout.
struct Cplx {
  Real re, im;

  Cplx() : re(0), im(0) {}
  Cplx(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cplx(double r, double i = 0.0) : re(r), im(i) {}

  bool is_real() const { return im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Cplx conj() const { return Cplx(re, -im); }

  Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
  Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
  Cplx& operator*=(const Cplx& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Cplx& operator*=(const Real& s) { re *= s; im *= s; return *this; }
  Cplx& operator*=(const mpq_class& q) { re *= q; im *= q; return *this; }
  Cplx& operator*=(double d) { re *= d; im *= d; return *this; }

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return Cplx(a.re + b.re, a.im + b.im); }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return Cplx(a.re - b.re, a.im - b.im); }
  friend Cplx operator-(const Cplx& a) { return Cplx(-a.re, -a.im); }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Cplx operator*(const Real& s, const Cplx& a) { return Cplx(s * a.re, s * a.im); }
  friend Cplx operator*(const Cplx& a, const Real& s) { return s * a; }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    Real n = b.re * b.re + b.im * b.im;
    return Cplx((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  friend Cplx operator/(const Cplx& a, const Real& s) { return Cplx(a.re / s, a.im / s); }
  friend Cplx operator/(long a, const Cplx& b) {
    Real n = b.re * b.re + b.im * b.im;
    return Cplx(a * b.re / n, Real(-a) * b.im / n);
  }
  friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
};

inline Real abs(const Cplx& z) { return hypot(z.re, z.im); }
inline Real norm(const Cplx& z) { return z.re * z.re + z.im * z.im; }

// Principal square root, computed without trigonometry.
Cplx sqrt(const Cplx& z);
// Principal logarithm.
Cplx log(const Cplx& z);
Cplx exp(const Cplx& z);
// exp(y * log(z)) with the principal log.
Cplx pow(const Cplx& z, const Real& y);

}  // namespace jpotts
