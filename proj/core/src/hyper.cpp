#include "jpotts/hyper.hpp"

#include <algorithm>
#include <cmath>

#include "jpotts/errors.hpp"

namespace jpotts {

namespace {

bool is_nonpositive_integer(const mpq_class& q) {
  return q.get_den() == 1 && q.get_num() <= 0;
}

// Parameters with small power-of-two denominators stay exact in double
// through (a + n) for every n reached here, which keeps the hot path on
// mpfr_mul_d / mpfr_div_d instead of rational arithmetic.
bool dyadic_small(const mpq_class& q) {
  mpz_srcptr den = q.get_den_mpz_t();
  if (!mpz_fits_ulong_p(den)) return false;
  unsigned long d = mpz_get_ui(den);
  if (d > 64 || (d & (d - 1)) != 0) return false;
  return mpz_cmpabs_ui(q.get_num_mpz_t(), 4096) < 0;
}

struct Magnitude {
  static Real of(const Real& x) { return abs(x); }
  static Real of(const Cplx& z) { return abs(z); }
};

void scale_by(Real& x, double f) { x *= f; }
void scale_by(Cplx& z, double f) { z.re *= f; z.im *= f; }
void scale_div(Real& x, double f) { x /= f; }
void scale_div(Cplx& z, double f) { z.re /= f; z.im /= f; }
void scale_by(Real& x, const mpq_class& f) { x *= f; }
void scale_by(Cplx& z, const mpq_class& f) { z.re *= f; z.im *= f; }

template <class S>
struct SeriesSum {
  S value;
  Real err;
  long terms;
  bool endpoint;
};

// Core engine: sums Σ_n Π(a_i)_n / (Π(b_j)_n n!) z^n with the term updated
// by exact factor arithmetic. Inside the unit disk the tail is bounded by a
// geometric majorant whose ratio dominates every remaining term ratio; on
// the unit circle (positive parameter excess e) terms decay like n^(-1-e)
// and the tail is bounded through an integral comparison.
template <class S>
SeriesSum<S> sum_pfq(const HyperSeriesSpec& spec, const S& z, const PrecisionConfig& prec) {
  const Real absz = Magnitude::of(z);
  const double absz_d = absz.to_double();

  if (absz_d > 1.0 + 1e-10) {
    throw DivergenceError("pfq: |argument| > 1, series diverges");
  }
  const bool endpoint = absz_d > 1.0 - 1e-10;
  const mpq_class excess = spec.parameter_excess();
  const double excess_d = excess.get_d();
  if (endpoint && excess_d <= 0.0) {
    throw DivergenceError("pfq: |argument| = 1 requires positive parameter excess");
  }
  const bool dominated = spec.ratios_dominated();

  if (absz.is_zero()) {
    return {S(Real(1)), Real(0), 1, false};
  }

  // Split parameters into an exact-double fast path and a rational fallback.
  std::vector<double> up_d, lo_d;
  std::vector<mpq_class> up_q, lo_q;
  for (const auto& a : spec.upper) {
    if (dyadic_small(a)) up_d.push_back(a.get_d()); else up_q.push_back(a);
  }
  for (const auto& b : spec.lower) {
    if (dyadic_small(b)) lo_d.push_back(b.get_d()); else lo_q.push_back(b);
  }

  const Real tol = prec.tail_tol();
  S term{Real(1)};
  S sum{Real(1)};
  Real mag(1);
  double rhist[3] = {2.0, 2.0, 2.0};
  long n = 0;

  mpq_class num, den;
  for (;; ++n) {
    if (n >= prec.max_terms) {
      throw ConvergenceError("pfq: term cap reached before tail bound met target");
    }
    // term_{n+1} = term_n * z * Π(a+n) / (Π(b+n)(n+1))
    for (double a : up_d) scale_by(term, a + static_cast<double>(n));
    for (double b : lo_d) scale_div(term, b + static_cast<double>(n));
    if (!up_q.empty() || !lo_q.empty()) {
      num = 1; den = 1;
      for (const auto& a : up_q) num *= (a + n);
      for (const auto& b : lo_q) den *= (b + n);
      scale_by(term, mpq_class(num / den));
    }
    scale_div(term, static_cast<double>(n + 1));
    term *= z;
    sum += term;

    Real prev = std::move(mag);
    mag = Magnitude::of(term);
    if (mag.is_zero()) {
      // A nonpositive-integer upper parameter terminated the series.
      return {std::move(sum), Real(0), n + 2, false};
    }
    double r = prev.is_zero() ? 2.0 : (mag / prev).to_double();
    rhist[n % 3] = r;

    if (!endpoint) {
      double q = std::max(absz_d, r);
      if (!dominated) q = std::max({q, rhist[0], rhist[1], rhist[2]});
      if (n >= 3 && q < 1.0) {
        Real bound = mag * (q / (1.0 - q));
        if (bound < tol) {
          return {std::move(sum), std::move(bound), n + 2, false};
        }
      }
    } else {
      // |t_k| <= |t_N| ((N+2)/(k+2))^(1+e) for k >= N once the ratio has
      // settled; integral comparison then gives tail <= |t_N| (N+2)/e.
      if (n >= 32) {
        Real bound = mag * (2.0 * (static_cast<double>(n) + 3.0) / excess_d);
        if (bound < tol) {
          return {std::move(sum), std::move(bound), n + 2, true};
        }
      }
    }
  }
}

Real roundoff_allowance(const Real& scale, long terms) {
  return abs(scale) * static_cast<double>(terms + 4) * ldexp(Real(1), 2 - working_prec_bits());
}

}  // namespace

HyperSeriesSpec HyperSeriesSpec::f21(mpq_class a, mpq_class b, mpq_class c, Cplx z) {
  return HyperSeriesSpec{{std::move(a), std::move(b)}, {std::move(c)}, std::move(z)};
}

HyperSeriesSpec HyperSeriesSpec::f32(mpq_class a1, mpq_class a2, mpq_class a3, mpq_class b1,
                                     mpq_class b2, Cplx z) {
  return HyperSeriesSpec{{std::move(a1), std::move(a2), std::move(a3)},
                         {std::move(b1), std::move(b2)},
                         std::move(z)};
}

HyperSeriesSpec HyperSeriesSpec::f43(std::array<mpq_class, 4> a, std::array<mpq_class, 3> b,
                                     Cplx z) {
  return HyperSeriesSpec{{a.begin(), a.end()}, {b.begin(), b.end()}, std::move(z)};
}

HyperSeriesSpec HyperSeriesSpec::f54(std::array<mpq_class, 5> a, std::array<mpq_class, 4> b,
                                     Cplx z) {
  return HyperSeriesSpec{{a.begin(), a.end()}, {b.begin(), b.end()}, std::move(z)};
}

void HyperSeriesSpec::validate() const {
  if (upper.size() != lower.size() + 1) {
    throw DomainError("HyperSeriesSpec: expected p = q + 1 parameters");
  }
  for (const auto& b : lower) {
    if (is_nonpositive_integer(b)) {
      throw DomainError("HyperSeriesSpec: lower parameter is zero or a negative integer");
    }
  }
}

mpq_class HyperSeriesSpec::parameter_excess() const {
  mpq_class e(0);
  for (const auto& b : lower) e += b;
  for (const auto& a : upper) e -= a;
  return e;
}

bool HyperSeriesSpec::ratios_dominated() const {
  std::vector<mpq_class> up = upper;
  std::vector<mpq_class> lo = lower;
  lo.emplace_back(1);
  std::sort(up.begin(), up.end());
  std::sort(lo.begin(), lo.end());
  if (up.size() != lo.size()) return false;
  for (size_t i = 0; i < up.size(); ++i) {
    if (up[i] > lo[i]) return false;
  }
  return true;
}

EvalResult pfq(const HyperSeriesSpec& spec, const PrecisionConfig& prec) {
  spec.validate();
  PrecisionScope scope(prec.working());

  EvalResult res;
  if (spec.argument.is_real()) {
    auto s = sum_pfq<Real>(spec, spec.argument.re, prec);
    res.value = Cplx(std::move(s.value));
    res.err_bound = std::move(s.err);
    res.work.terms = s.terms;
    res.method = s.endpoint ? Method::series_endpoint : Method::series;
  } else {
    auto s = sum_pfq<Cplx>(spec, spec.argument, prec);
    res.value = std::move(s.value);
    res.err_bound = std::move(s.err);
    res.work.terms = s.terms;
    res.method = s.endpoint ? Method::series_endpoint : Method::series;
  }
  res.err_bound += roundoff_allowance(abs(res.value), res.work.terms);
  return res;
}

mpq_class pochhammer(const mpq_class& a, unsigned long n) {
  mpq_class r(1);
  mpq_class f = a;
  for (unsigned long k = 0; k < n; ++k) {
    r *= f;
    f += 1;
  }
  return r;
}

Real deriv_5f4_identity_residual(const mpq_class& s, const Cplx& z, const PrecisionConfig& prec) {
  if (s <= 0 || s >= 1) {
    throw DomainError("deriv_5f4_identity_residual: s must lie in (0,1)");
  }
  PrecisionScope scope(prec.working());
  Real az = abs(z);
  if (az.is_zero() || az >= Real(1)) {
    throw DomainError("deriv_5f4_identity_residual: need 0 < |z| < 1");
  }

  // d/dz [z 5F4(2-s,3/2,1+s,1,1;2,2,2,2;z)] = 4F3(2-s,3/2,1+s,1;2,2,2;z),
  // term by term: the (n+1) from the derivative cancels one (1)_n/(2)_n pair.
  auto lhs = pfq(HyperSeriesSpec::f43({2 - s, mpq_class(3, 2), 1 + s, 1}, {2, 2, 2}, z), prec);
  auto rhs32 =
      pfq(HyperSeriesSpec::f32(1 - s, mpq_class(1, 2), s, 1, 1, z), prec);

  mpq_class pref = mpq_class(2) / (s * (1 - s));
  Cplx rhs = (rhs32.value - Cplx(Real(1))) / z;
  rhs.re *= pref;
  rhs.im *= pref;
  return abs(lhs.value - rhs);
}

mpq_class deriv_identity_lhs_coeff(const mpq_class& s, unsigned long n) {
  // 4F3 coefficient with one upper parameter 1: the (1)_n cancels the n!.
  mpq_class num = pochhammer(2 - s, n) * pochhammer(mpq_class(3, 2), n) * pochhammer(1 + s, n);
  mpq_class den = pochhammer(2, n);
  den = den * den * den;
  return num / den;
}

mpq_class deriv_identity_rhs_coeff(const mpq_class& s, unsigned long n) {
  unsigned long m = n + 1;
  mpq_class num = pochhammer(1 - s, m) * pochhammer(mpq_class(1, 2), m) * pochhammer(s, m);
  mpz_class mf;
  mpz_fac_ui(mf.get_mpz_t(), m);
  mpq_class den = pochhammer(1, m) * pochhammer(1, m) * mf;
  return mpq_class(2) / (s * (1 - s)) * num / den;
}

std::pair<Real, Real> erdelyi_quadratic_chain(const Real& alpha, const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  Real alpha_star = Real(3) - ldexp(sqrt(Real(2)), 1);
  if (alpha.sign() <= 0 || alpha > alpha_star * (Real(1) + pow10(-(prec.digits - 4)))) {
    throw DomainError("erdelyi_quadratic_chain: alpha must lie in (0, (sqrt(2)-1)^2]");
  }

  Real w = Real(4) * alpha * (Real(1) - alpha);
  Real sq = sqrt(w);
  Real t = sq + Real(1) / sq;
  Real z = Real(4) / (t * t);
  Real f18 = pfq(HyperSeriesSpec::f21(mpq_class(1, 8), mpq_class(5, 8), 1, Cplx(z)), prec).real();
  Real lhs = f18 * f18 / rootn(Real(1) - z, 4);

  Real f12 = pfq(HyperSeriesSpec::f21(mpq_class(1, 2), mpq_class(1, 2), 1, Cplx(alpha)), prec).real();
  Real rhs = (Real(1) + Real(4) * alpha - Real(4) * alpha * alpha) / (Real(1) - ldexp(alpha, 1)) *
             f12 * f12;
  return {std::move(lhs), std::move(rhs)};
}

std::array<Real, 3> clausen_square_residuals(const Cplx& alpha, const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  const Cplx one{Real(1)};
  Cplx omal = one - alpha;
  Cplx opal = one + alpha;

  Cplx z1 = Real(4) * (alpha * omal);
  Cplx z2 = -(Real(4) * alpha) / (omal * omal);
  Cplx opal2 = opal * opal;
  Cplx z3 = Real(16) * (alpha * (omal * omal)) / (opal2 * opal2);
  for (const Cplx* z : {&z1, &z2, &z3}) {
    if (abs(*z) >= Real(1)) {
      throw DivergenceError("clausen_square_residuals: transformed argument left the unit disk");
    }
  }

  Cplx f = pfq(HyperSeriesSpec::f21(mpq_class(1, 2), mpq_class(1, 2), 1, alpha), prec).value;
  Cplx f2 = f * f;

  mpq_class h(1, 2), q4(1, 4), q34(3, 4);
  Cplx lhs1 = pfq(HyperSeriesSpec::f32(h, h, h, 1, 1, z1), prec).value;
  Cplx lhs2 = pfq(HyperSeriesSpec::f32(h, h, h, 1, 1, z2), prec).value;
  Cplx lhs3 = pfq(HyperSeriesSpec::f32(q4, h, q34, 1, 1, z3), prec).value;

  return {abs(lhs1 - f2), abs(lhs2 - omal * f2), abs(lhs3 - opal * f2)};
}

}  // namespace jpotts
