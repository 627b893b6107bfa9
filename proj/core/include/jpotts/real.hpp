#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

namespace jpotts {

// Thread-local working precision in decimal digits. Freshly constructed
// values and arithmetic results are rounded to this precision; copies keep
// the precision of their source.
int working_digits();
void set_working_digits(int digits);
mpfr_prec_t working_prec_bits();

// RAII guard: sets the working precision for the enclosing scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits) : saved_(working_digits()) { set_working_digits(digits); }
  ~PrecisionScope() { set_working_digits(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

// Value-semantic wrapper around mpfr_t. Round-to-nearest everywhere.
class Real {
 public:
  Real() { mpfr_init2(v_, working_prec_bits()); mpfr_set_zero(v_, 1); }
  explicit Real(double d) : Real() { mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(long n) : Real() { mpfr_set_si(v_, n, MPFR_RNDN); }
  Real(int n) : Real(static_cast<long>(n)) {}
  explicit Real(unsigned long n) : Real() { mpfr_set_ui(v_, n, MPFR_RNDN); }
  explicit Real(const mpq_class& q) : Real() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  explicit Real(const mpz_class& z) : Real() { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  explicit Real(std::string_view dec) : Real() {
    mpfr_set_str(v_, std::string(dec).c_str(), 10, MPFR_RNDN);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Scientific-notation string with the given significant digits.
  std::string str(int digits = 0) const;

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator*=(double d) { mpfr_mul_d(v_, v_, d, MPFR_RNDN); return *this; }
  Real& operator/=(double d) { mpfr_div_d(v_, v_, d, MPFR_RNDN); return *this; }
  Real& operator*=(const mpq_class& q) { mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN); return *this; }
  Real& operator/=(const mpq_class& q) { mpfr_div_q(v_, v_, q.get_mpq_t(), MPFR_RNDN); return *this; }

  Real operator-() const {
    Real r = make();
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) { Real r = make(); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r = make(); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r = make(); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r = make(); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

  friend Real operator+(const Real& a, long b) { Real r = make(); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, long b) { Real r = make(); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, long b) { Real r = make(); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, long b) { Real r = make(); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b) { Real r = make(); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b) { Real r = make(); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r; }

  friend Real operator*(const Real& a, double b) { Real r = make(); mpfr_mul_d(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator*(double a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, double b) { Real r = make(); mpfr_div_d(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator+(const Real& a, double b) { Real r = make(); mpfr_add_d(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, double b) { Real r = make(); mpfr_sub_d(r.v_, a.v_, b, MPFR_RNDN); return r; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  // Uninitialized-value factory used by the free functions below.
  static Real make() { return Real(uninit_tag{}); }

 private:
  struct uninit_tag {};
  explicit Real(uninit_tag) { mpfr_init2(v_, working_prec_bits()); }
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real rootn(const Real& x, unsigned long k);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(Real& s, Real& c, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
void sinh_cosh(Real& s, Real& c, const Real& x);
Real tanh(const Real& x);
Real asinh(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long k);
Real pow(const Real& x, const Real& y);
Real agm(const Real& a, const Real& b);
Real gamma(const Real& x);
Real zeta(unsigned long s);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real ldexp(const Real& x, long e);

Real const_pi();
Real const_log2();
Real const_catalan();

// 10^(-digits), handy as a tolerance.
Real pow10(long e);

}  // namespace jpotts
