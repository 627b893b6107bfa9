#include "jpotts/modular.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "jpotts/errors.hpp"
#include "jpotts/integrate1d.hpp"

namespace jpotts {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

QSeries QSeries::mul(const QSeries& other) const {
  QSeries r;
  r.frac_exp = frac_exp + other.frac_exp;
  r.order = std::min(order, other.order);
  r.c.assign(static_cast<size_t>(r.order) + 1, mpz_class(0));
  const long na = std::min<long>(static_cast<long>(c.size()) - 1, r.order);
  for (long i = 0; i <= na; ++i) {
    if (c[i] == 0) continue;
    const long jmax = std::min<long>(static_cast<long>(other.c.size()) - 1, r.order - i);
    for (long j = 0; j <= jmax; ++j) {
      if (other.c[j] == 0) continue;
      r.c[i + j] += c[i] * other.c[j];
    }
  }
  return r;
}

QSeries QSeries::pow_u(unsigned e) const {
  QSeries r;
  r.frac_exp = 0;
  r.order = order;
  r.c.assign(static_cast<size_t>(order) + 1, mpz_class(0));
  r.c[0] = 1;
  for (unsigned i = 0; i < e; ++i) r = r.mul(*this);
  return r;
}

QSeries QSeries::euler_product(long scale, long order) {
  QSeries r;
  r.frac_exp = 0;
  r.order = order;
  r.c.assign(static_cast<size_t>(order) + 1, mpz_class(0));
  r.c[0] = 1;
  // Pentagonal number theorem: sum_j (-1)^j q^{j(3j-1)/2} over all j.
  for (long j = 1;; ++j) {
    const long g1 = scale * (j * (3 * j - 1)) / 2;
    const long g2 = scale * (j * (3 * j + 1)) / 2;
    if (g1 > order && g2 > order) break;
    const int sign = (j % 2 == 0) ? 1 : -1;
    if (g1 <= order) r.c[g1] += sign;
    if (g2 <= order) r.c[g2] += sign;
  }
  return r;
}

QSeries QSeries::eta(long scale, long order) {
  QSeries r = euler_product(scale, order);
  r.frac_exp = mpq_class(scale, 24);
  return r;
}

EvalResult eta_q(const Real& q, long order, const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  if (q.sign() <= 0 || q >= Real(1)) {
    throw DomainError("eta_q: q must lie in (0,1)");
  }
  if (order <= 0) {
    // q^{N+1}/(1-q)^2 < 10^{-(digits+8)}
    double lq = std::log(q.to_double());
    double l1q = std::log1p(-q.to_double());
    order = static_cast<long>(std::ceil(((prec.digits + 8) * std::log(10.0) + 2 * std::abs(l1q)) /
                                        (-lq))) +
            4;
  }

  Real prod(1);
  Real qn = q;
  for (long n = 1; n <= order; ++n) {
    prod *= (Real(1) - qn);
    qn *= q;
  }
  // qn = q^{order+1}
  Real omq = Real(1) - q;
  Real rel_tail = expm1(qn / (omq * omq));
  Real value = rootn(q, 24) * prod;

  EvalResult res;
  res.err_bound = abs(value) * rel_tail + abs(value) * pow10(-(prec.digits + 8));
  res.value = Cplx(std::move(value));
  res.method = Method::series;
  res.work.terms = order;
  return res;
}

EvalResult u_of_q(const Real& q, const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  auto e1 = eta_q(q, 0, prec);
  auto e2 = eta_q(q * q, 0, prec);
  auto e4 = eta_q(q * q * q * q, 0, prec);
  Real base = rootn(Real(2), 4) * e1.real() * e4.real() / (e2.real() * e2.real());
  Real m = pow(base, 12L);
  Real value = m + Real(1) / m;

  EvalResult res;
  // d(u)/u is at most 12 * (relative error of the eta quotient) * |m - 1/m|/u
  Real rel = (e1.err_bound / abs(e1.real())) + (e4.err_bound / abs(e4.real())) +
             Real(2) * (e2.err_bound / abs(e2.real()));
  res.err_bound = Real(12) * rel * (m + Real(1) / m) + abs(value) * pow10(-(prec.digits + 8));
  res.value = Cplx(std::move(value));
  res.method = Method::series;
  res.work.terms = e1.work.terms + e2.work.terms + e4.work.terms;
  return res;
}

namespace {

// Summand of the lattice expansions.
inline double lattice_term(double n2, double c2k2) {
  const double d = n2 + c2k2;
  return (3.0 * n2 - c2k2) / (d * d * d);
}

struct Kahan {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// Partial sums of S1 and S2 over square shells max(|n|,|k|) <= R, using the
// exact (n,k) -> (-n,-k) symmetry: one quadrant plus axes, scaled.
void lattice_partials(double v, long R, double* s1_out, double* s2_out, long* points) {
  const double c = 2.0 * v;
  const double c2 = c * c;
  Kahan s1, s2;
  long n_points = 0;
  for (long s = 1; s <= R; ++s) {
    const double sd = static_cast<double>(s);
    // S1 axis terms (n,0) and (0,k), both signs.
    s1.add(2.0 * lattice_term(sd * sd, 0.0));
    s1.add(2.0 * lattice_term(0.0, c2 * sd * sd));
    // S1 quadrant terms with max(n,k) = s, all four sign pairs.
    s1.add(4.0 * lattice_term(sd * sd, c2 * sd * sd));
    n_points += 3;
    for (long m = 1; m < s; ++m) {
      const double md = static_cast<double>(m);
      s1.add(4.0 * lattice_term(sd * sd, c2 * md * md));
      s1.add(4.0 * lattice_term(md * md, c2 * sd * sd));
      n_points += 2;
    }
    // S2 over odd integers: shell in the odd index o = 2j-1 <= 2R-1.
    const double o = 2.0 * sd - 1.0;
    s2.add(4.0 * lattice_term(o * o, c2 * o * o));
    n_points += 1;
    for (long m = 1; m < s; ++m) {
      const double om = 2.0 * static_cast<double>(m) - 1.0;
      s2.add(4.0 * lattice_term(o * o, c2 * om * om));
      s2.add(4.0 * lattice_term(om * om, c2 * o * o));
      n_points += 2;
    }
  }
  if (points) *points += n_points;
  *s1_out = s1.s;
  *s2_out = s2.s;
}

double lattice_value(double v, long R, long* points) {
  double s1 = 0.0, s2 = 0.0;
  lattice_partials(v, R, &s1, &s2, points);
  const double pi3 = kPi * kPi * kPi;
  return -3.0 * std::log(2.0) + (15.0 * v / pi3) * s1 + (48.0 * v / pi3) * s2;
}

}  // namespace

EvalResult j_lattice(const LatticeSumSpec& spec) {
  if (spec.v < 0.5) {
    throw DomainError("j_lattice: the expansion requires v >= 1/2");
  }
  if (spec.radius < 8) {
    throw DomainError("j_lattice: cutoff radius too small");
  }
  long points = 0;
  const double jr = lattice_value(spec.v, spec.radius, &points);
  const double jh = lattice_value(spec.v, spec.radius / 2, &points);
  const double correction = (jr - jh) / 3.0;  // tail ~ C/R^2

  EvalResult res;
  res.method = Method::lattice_sum;
  res.work.nodes = points;
  if (spec.extrapolate) {
    res.value = Cplx(Real(jr + correction));
    res.err_bound = Real(std::abs(correction));
  } else {
    res.value = Cplx(Real(jr));
    res.err_bound = Real(std::abs(jr - jh));
  }
  return res;
}

const mpq_class& bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<mpq_class> cache{mpq_class(1)};  // B_0
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
    mpq_class acc(0);
    mpz_class binom;
    for (unsigned k = 0; k < m; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
      acc += mpq_class(binom) * cache[k];
    }
    acc /= -(static_cast<long>(m) + 1);
    cache.push_back(acc);
  }
  return cache[n];
}

Real hurwitz_zeta(long s, const mpq_class& a, const PrecisionConfig& prec, long* terms_used) {
  if (s < 2) throw DomainError("hurwitz_zeta: integer s >= 2 required");
  if (a <= 0 || a > 1) throw DomainError("hurwitz_zeta: a must lie in (0,1]");
  PrecisionScope scope(prec.working());

  const long N = std::max<long>(24, prec.working());
  Real sum(0);
  for (long k = 0; k < N; ++k) {
    sum += pow(Real(mpq_class(a + k)), -s);
  }
  Real x = Real(mpq_class(a + N));
  Real inv_x = Real(1) / x;
  sum += pow(x, 1 - s) / Real(s - 1);
  sum += ldexp(pow(x, -s), -1);

  // sum_j B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
  const Real tol = pow10(-(prec.digits + 10));
  mpz_class poch(s);  // (s)_{2j-1} built incrementally
  mpz_class fact(2);  // (2j)!
  Real xpow = pow(x, -s - 1);
  bool converged = false;
  for (long j = 1; j <= 80; ++j) {
    if (j > 1) {
      poch *= (s + 2 * j - 3);
      poch *= (s + 2 * j - 2);
      fact *= (2 * j - 1);
      fact *= (2 * j);
      xpow *= inv_x;
      xpow *= inv_x;
    }
    mpq_class coeff = bernoulli(static_cast<unsigned>(2 * j)) * mpq_class(poch) / mpq_class(fact);
    Real term = xpow;
    term *= coeff;
    sum += term;
    if (abs(term) < tol) {
      converged = true;
      if (terms_used) *terms_used = N + j;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin tail failed to reach the target");
  }
  return sum;
}

EvalResult dirichlet_l(int modulus_tag, long s, const PrecisionConfig& prec) {
  if (s < 2) throw DomainError("dirichlet_l: s >= 2 required");
  PrecisionScope scope(prec.working());
  Real value = Real::make();
  long t1 = 0, t2 = 0;
  if (modulus_tag == -4) {
    value = (hurwitz_zeta(s, mpq_class(1, 4), prec, &t1) -
             hurwitz_zeta(s, mpq_class(3, 4), prec, &t2)) /
            pow(Real(4), s);
  } else if (modulus_tag == -3) {
    value = (hurwitz_zeta(s, mpq_class(1, 3), prec, &t1) -
             hurwitz_zeta(s, mpq_class(2, 3), prec, &t2)) /
            pow(Real(3), s);
  } else {
    throw DomainError("dirichlet_l: modulus tag must be -4 or -3");
  }
  EvalResult res;
  res.err_bound = abs(value) * pow10(-(prec.digits + 6)) + pow10(-(prec.digits + 8));
  res.value = Cplx(std::move(value));
  res.method = Method::euler_maclaurin;
  res.work.terms = t1 + t2;
  return res;
}

std::vector<mpz_class> eta23_63_coefficients(long n_max) {
  // eta(2t)^3 eta(6t)^3 = q * prod (1-q^{2n})^3 (1-q^{6n})^3.
  const long order = n_max;  // coefficients of q^{1+j}, j <= n_max - 1
  QSeries p2 = QSeries::euler_product(2, order).pow_u(3);
  QSeries p6 = QSeries::euler_product(6, order).pow_u(3);
  QSeries prod = p2.mul(p6);
  std::vector<mpz_class> a(static_cast<size_t>(n_max) + 1, mpz_class(0));
  for (long n = 1; n <= n_max; ++n) {
    if (n - 1 <= prod.order) a[static_cast<size_t>(n)] = prod.c[static_cast<size_t>(n - 1)];
  }
  return a;
}

namespace {

// f(iy) = sum a_n exp(-2 pi n y), truncated; powers of exp(-2 pi y) are
// accumulated multiplicatively.
Real cusp_form_on_axis(const std::vector<mpz_class>& a, const Real& y) {
  Real q = exp(Real(-2) * const_pi() * y);
  Real qn(1);
  Real sum(0);
  for (size_t n = 1; n < a.size(); ++n) {
    qn *= q;
    if (a[n] != 0) {
      Real term = qn;
      term *= mpq_class(a[n]);
      sum += term;
    }
  }
  return sum;
}

}  // namespace

EvalResult l_eta_product_3(const PrecisionConfig& prec, FrickeCheck* check) {
  PrecisionScope scope(prec.working());
  const int d = prec.digits;
  const double two_pi_y0 = kPi / std::sqrt(3.0);  // 2 pi / sqrt(12)
  const long n_max =
      static_cast<long>(std::ceil((d + 12) * std::log(10.0) / two_pi_y0)) + 6;
  const std::vector<mpz_class> a = eta23_63_coefficients(n_max);

  const Real y0 = Real(1) / sqrt(Real(12));
  const Real twelve_pow = pow(Real(12), Real(1.5));

  // Measure the reflection eigenvalue of f(iy) under y -> 1/(12 y).
  Real eigen(0);
  Real deviation(0);
  bool first = true;
  for (double yprobe : {0.27, 0.301, 0.342}) {
    Real y(yprobe);
    Real lhs = cusp_form_on_axis(a, Real(1) / (Real(12) * y));
    Real rhs = twelve_pow * y * y * y * cusp_form_on_axis(a, y);
    Real w = lhs / rhs;
    Real rounded = w.sign() >= 0 ? Real(1) : Real(-1);
    Real dev = abs(w - rounded);
    if (first) {
      eigen = rounded;
      first = false;
    } else if (!(eigen == rounded)) {
      throw ReflectionError("l_eta_product_3: inconsistent reflection sign across probes");
    }
    deviation = max(deviation, dev);
  }
  if (!(deviation < pow10(-(d - 8)))) {
    throw ReflectionError("l_eta_product_3: measured reflection relation deviates beyond tolerance");
  }
  if (check) {
    check->eigenvalue = eigen;
    check->deviation = deviation;
  }

  // Lambda(3) = I2 + w 12^{-3/2} I0 over [y0, inf), mapped by y = y0 e^x so
  // both integrands are entire and decay double-exponentially.
  const double xcut = std::log(((d + 14) * std::log(10.0)) / two_pi_y0) + 0.35;
  long evals0 = 0, evals2 = 0;
  Real e0 = Real::make(), e2 = Real::make();
  Real i2 = tanh_sinh_1d(
      [&](const Real& x) {
        Real y = y0 * exp(x);
        return cusp_form_on_axis(a, y) * y * y * y;
      },
      Real(0), Real(xcut), d + 6, &e2, &evals2);
  Real i0 = tanh_sinh_1d(
      [&](const Real& x) {
        Real y = y0 * exp(x);
        return cusp_form_on_axis(a, y);
      },
      Real(0), Real(xcut), d + 6, &e0, &evals0);

  Real lambda = i2 + eigen * i0 / twelve_pow;
  Real two_pi = ldexp(const_pi(), 1);
  Real value = lambda * pow(two_pi, 3L) / Real(2);  // (2 pi)^3 / Gamma(3)

  EvalResult res;
  res.err_bound = (e2 + e0 / twelve_pow) * pow(two_pi, 3L) / Real(2) +
                  abs(value) * pow10(-(d + 4));
  res.value = Cplx(std::move(value));
  res.method = Method::mellin;
  res.work.terms = n_max;
  res.work.nodes = evals0 + evals2;
  return res;
}

EvalResult j_special(SpecialT which, const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  Real three_log2 = Real(3) * const_log2();
  EvalResult res;
  res.method = Method::special_value;
  if (which == SpecialT::two) {
    auto l4 = dirichlet_l(-4, 2, prec);
    Real value = Real(8) / const_pi() * l4.real() - three_log2;
    res.err_bound = Real(8) / const_pi() * l4.err_bound + pow10(-(prec.digits + 6));
    res.value = Cplx(std::move(value));
    res.work = l4.work;
  } else {
    auto lf = l_eta_product_3(prec, nullptr);
    auto l3 = dirichlet_l(-3, 2, prec);
    Real pi = const_pi();
    Real s3 = sqrt(Real(3));
    Real value = Real(24) * s3 / pow(pi, 3L) * lf.real() +
                 Real(15) * s3 / (Real(4) * pi) * l3.real() - three_log2;
    res.err_bound = Real(24) * s3 / pow(pi, 3L) * lf.err_bound +
                    Real(15) * s3 / (Real(4) * pi) * l3.err_bound + pow10(-(prec.digits + 6));
    res.value = Cplx(std::move(value));
    res.work.terms = lf.work.terms + l3.work.terms;
    res.work.nodes = lf.work.nodes;
  }
  return res;
}

}  // namespace jpotts
