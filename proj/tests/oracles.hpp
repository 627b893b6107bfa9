// Independent reference implementations used only by the tests. Each oracle
// deliberately avoids the code path it checks: the AGM loop is written out
// by hand, the alternating-series acceleration is the Cohen-Rodriguez
// Villegas-Zagier scheme, moments come from multinomial expansion, and the
// q-series references multiply polynomials naively.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "jpotts/complex.hpp"
#include "jpotts/real.hpp"

namespace oracles {

using jpotts::Real;

// Arithmetic-geometric mean by plain iteration.
inline Real agm_plain(Real a, Real b) {
  for (int i = 0; i < 200; ++i) {
    Real m = jpotts::ldexp(a + b, -1);
    Real g = jpotts::sqrt(a * b);
    if (jpotts::abs(m - g) < jpotts::abs(m) * jpotts::pow10(-(jpotts::working_digits() + 2))) {
      return m;
    }
    a = m;
    b = g;
  }
  return jpotts::ldexp(a + b, -1);
}

// 2F1(1/2,1/2;1;z) = 1/agm(1, sqrt(1-z)) for z in [0,1).
inline Real gauss_2f1_half_agm(const Real& z) {
  return Real(1) / agm_plain(Real(1), jpotts::sqrt(Real(1) - z));
}

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k.
// Error decays like (3 + sqrt 8)^(-n).
inline Real cvz_alternating(const std::function<Real(long)>& a, int n) {
  Real d = jpotts::pow(Real(3) + jpotts::ldexp(jpotts::sqrt(Real(2)), 1), static_cast<long>(n));
  d = jpotts::ldexp(d + Real(1) / d, -1);
  Real b(-1), c = -d, s(0);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b *= Real(2) * (k + n) * (k - n);
    b /= Real(2 * k + 1) * (k + 1);
  }
  return s / d;
}

// Catalan's constant as L_{-4}(2) = sum (-1)^k/(2k+1)^2.
inline Real catalan_cvz(int digits) {
  const int n = static_cast<int>(digits / 0.76) + 8;
  return cvz_alternating(
      [](long k) {
        Real d(2 * k + 1);
        return Real(1) / (d * d);
      },
      n);
}

// <cos^{2m}> over [0,pi] is binom(2m,m)/4^m; odd moments vanish.
inline mpq_class cosine_moment(unsigned long p) {
  if (p % 2 == 1) return mpq_class(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), p, p / 2);
  mpz_class pow4(1);
  mpz_mul_2exp(pow4.get_mpz_t(), pow4.get_mpz_t(), p);  // 4^{p/2} = 2^p
  return mpq_class(b) / mpq_class(pow4);
}

// Exact moment <(c1+c2+c3 - c1 c2 c3)^p> by multinomial expansion.
inline mpq_class lattice_moment(unsigned long p) {
  mpq_class total(0);
  mpz_class coef;
  for (unsigned long i = 0; i <= p; ++i) {
    for (unsigned long j = 0; i + j <= p; ++j) {
      for (unsigned long k = 0; i + j + k <= p; ++k) {
        const unsigned long l = p - i - j - k;
        // p! / (i! j! k! l!)
        mpz_class m(1), tmp;
        mpz_fac_ui(m.get_mpz_t(), p);
        mpz_fac_ui(tmp.get_mpz_t(), i); mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), tmp.get_mpz_t());
        mpz_fac_ui(tmp.get_mpz_t(), j); mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), tmp.get_mpz_t());
        mpz_fac_ui(tmp.get_mpz_t(), k); mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), tmp.get_mpz_t());
        mpz_fac_ui(tmp.get_mpz_t(), l); mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), tmp.get_mpz_t());
        mpq_class term = mpq_class(m) * cosine_moment(i + l) * cosine_moment(j + l) *
                         cosine_moment(k + l);
        if (l % 2 == 1) term = -term;
        total += term;
      }
    }
  }
  return total;
}

// Exact power-series coefficients (in x) of (1-x)^(-1/4) [2F1(1/8,5/8;1;x)]^2,
// so that t G(t) = sum coeff_m x^m with x = 4/t^2.
inline std::vector<mpq_class> green_series_coeffs(unsigned long terms) {
  std::vector<mpq_class> f(terms, mpq_class(0)), bin(terms, mpq_class(0));
  // 2F1 coefficients (1/8)_m (5/8)_m / (m!)^2.
  mpq_class c(1);
  for (unsigned long m = 0; m < terms; ++m) {
    f[m] = c;
    c *= (mpq_class(1, 8) + m) * (mpq_class(5, 8) + m);
    c /= mpq_class((m + 1) * (m + 1));
  }
  // binomial series of (1-x)^(-1/4): (1/4)_m / m!.
  c = 1;
  for (unsigned long m = 0; m < terms; ++m) {
    bin[m] = c;
    c *= (mpq_class(1, 4) + m);
    c /= static_cast<long>(m + 1);
  }
  std::vector<mpq_class> f2(terms, mpq_class(0)), out(terms, mpq_class(0));
  for (unsigned long i = 0; i < terms; ++i) {
    for (unsigned long j = 0; i + j < terms; ++j) f2[i + j] += f[i] * f[j];
  }
  for (unsigned long i = 0; i < terms; ++i) {
    for (unsigned long j = 0; i + j < terms; ++j) out[i + j] += bin[i] * f2[j];
  }
  return out;
}

// Naive truncated product of (1 - q^{scale n}) for n = 1..nmax, coefficients
// of q^0..q^order.
inline std::vector<mpz_class> euler_product_brute(long scale, long nmax, long order) {
  std::vector<mpz_class> p(static_cast<size_t>(order) + 1, mpz_class(0));
  p[0] = 1;
  for (long n = 1; n <= nmax; ++n) {
    const long e = scale * n;
    if (e > order) break;
    for (long j = order; j >= e; --j) {
      p[static_cast<size_t>(j)] -= p[static_cast<size_t>(j - e)];
    }
  }
  return p;
}

// Same deterministic generator as the verification suite.
struct SplitMix64 {
  uint64_t s;
  explicit SplitMix64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace oracles
