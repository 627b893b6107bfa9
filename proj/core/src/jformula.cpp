#include "jpotts/jformula.hpp"

#include <array>
#include <type_traits>

#include "jpotts/errors.hpp"
#include "jpotts/greens.hpp"
#include "jpotts/hyper.hpp"

namespace jpotts {

namespace {

// Conservative radius of the complex disk accepted by j_hyper. Outside the
// positive real interval the series arguments can leave the unit disk well
// inside this radius; pfq then raises DivergenceError, which is the
// documented behaviour.
constexpr double kComplexDiskRadius = 0.15;

template <class S>
struct JhTerms {
  S value;
  Real err;
  long terms;
};

const std::array<mpq_class, 5> kUpper332{{mpq_class(3, 2), mpq_class(3, 2), mpq_class(3, 2),
                                          mpq_class(1), mpq_class(1)}};
const std::array<mpq_class, 5> kUpper574{{mpq_class(5, 4), mpq_class(3, 2), mpq_class(7, 4),
                                          mpq_class(1), mpq_class(1)}};
const std::array<mpq_class, 4> kLower2222{{mpq_class(2), mpq_class(2), mpq_class(2), mpq_class(2)}};

}  // namespace

Real alpha_star() { return Real(3) - ldexp(sqrt(Real(2)), 1); }

Real validity_t_min() { return alpha_to_t(alpha_star()); }

Cplx alpha_to_t(const Cplx& alpha) {
  if ((alpha.re.is_zero() && alpha.im.is_zero()) ||
      (alpha.im.is_zero() && alpha.re == Real(1))) {
    throw PoleError("alpha_to_t: pole at alpha in {0, 1}");
  }
  Cplx w = Real(4) * (alpha * (Cplx(Real(1)) - alpha));
  Cplx s = sqrt(w);
  return s + 1 / s;
}

Real alpha_to_t(const Real& alpha) {
  if (alpha.is_zero() || alpha == Real(1)) {
    throw PoleError("alpha_to_t: pole at alpha in {0, 1}");
  }
  Real w = Real(4) * alpha * (Real(1) - alpha);
  if (w.sign() <= 0) {
    throw DomainError("alpha_to_t: 4a(1-a) < 0 gives complex t; use the complex overload");
  }
  Real s = sqrt(w);
  return s + Real(1) / s;
}

Real t_to_alpha(const Real& t) {
  Real tmin = validity_t_min();
  if (t < tmin * (Real(1) - pow10(-(working_digits() - 4)))) {
    throw DomainError("t_to_alpha: t below the validity ray (t >= 2.080247...)");
  }
  Real disc = t * t - Real(4);
  if (disc.sign() < 0) disc = Real(0);
  Real sqw = ldexp(t - sqrt(disc), -1);
  Real w = sqw * sqw;
  Real rest = Real(1) - w;
  if (rest.sign() < 0) rest = Real(0);
  return ldexp(Real(1) - sqrt(rest), -1);
}

AlphaPoint AlphaPoint::make(const Cplx& alpha) {
  AlphaPoint pt;
  pt.alpha = alpha;
  if (alpha.is_real()) {
    return make(alpha.re);
  }
  if (abs(alpha) <= Real(kComplexDiskRadius)) {
    pt.region = AlphaRegion::complex_small;
    pt.t = alpha_to_t(alpha);
  } else {
    pt.region = AlphaRegion::invalid;
  }
  return pt;
}

AlphaPoint AlphaPoint::make(const Real& alpha) {
  AlphaPoint pt;
  pt.alpha = Cplx(alpha);
  if (alpha.is_zero()) {
    pt.region = AlphaRegion::invalid;
    return pt;
  }
  Real astar = alpha_star();
  // Absorbs roundoff in an endpoint value computed at working precision.
  Real slack = astar * pow10(-(working_digits() - 6));
  if (alpha.sign() > 0 && alpha <= astar + slack) {
    pt.region = AlphaRegion::real_valid;
    pt.t = Cplx(alpha_to_t(alpha));
  } else if (abs(alpha) <= Real(kComplexDiskRadius)) {
    pt.region = AlphaRegion::complex_small;
    pt.t = alpha_to_t(Cplx(alpha));
  } else {
    pt.region = AlphaRegion::invalid;
  }
  return pt;
}

namespace {

// Shared skeleton of j_hyper for real and complex alpha. S is Real or Cplx.
template <class S>
JhTerms<S> j_hyper_impl(const S& alpha, const PrecisionConfig& prec) {
  const S one{Real(1)};
  S omal = one - alpha;
  S opal = one + alpha;
  S omal2 = omal * omal;
  S opal2 = opal * opal;
  S opal4 = opal2 * opal2;

  S z1 = Real(4) * (alpha * omal);
  S z2 = -(Real(4) * alpha) / omal2;
  S z3 = Real(16) * (alpha * omal2) / opal4;

  auto f1 = pfq(HyperSeriesSpec::f54(kUpper332, kLower2222, Cplx(z1)), prec);
  auto f2 = pfq(HyperSeriesSpec::f54(kUpper332, kLower2222, Cplx(z2)), prec);
  auto f3 = pfq(HyperSeriesSpec::f54(kUpper574, kLower2222, Cplx(z3)), prec);

  auto scalar = [](const Cplx& v) -> S {
    if constexpr (std::is_same_v<S, Real>) {
      return v.re;
    } else {
      return v;
    }
  };

  // -(1/2) log(4 a (1-a)^19 (1+a)^12), factor by factor with principal logs.
  S lg = log(S(Real(4))) + log(alpha) + Real(19) * log(omal) + Real(12) * log(opal);
  S value = lg * Real(-0.5);

  S c1 = alpha * omal;
  c1 *= mpq_class(-11, 4);
  S c2 = alpha / omal2;
  c2 *= mpq_class(-7, 4);
  S c3 = (alpha * omal2) / opal4;
  c3 *= mpq_class(9, 4);

  value += c1 * scalar(f1.value) + c2 * scalar(f2.value) + c3 * scalar(f3.value);

  Real err = abs(c1) * f1.err_bound + abs(c2) * f2.err_bound + abs(c3) * f3.err_bound;
  return {std::move(value), std::move(err), f1.work.terms + f2.work.terms + f3.work.terms};
}

}  // namespace

EvalResult j_hyper(const AlphaPoint& pt, const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  if (pt.region == AlphaRegion::invalid) {
    throw DomainError("j_hyper: alpha outside the accepted region");
  }
  EvalResult res;
  if (pt.alpha.is_real()) {
    auto s = j_hyper_impl<Real>(pt.alpha.re, prec);
    res.value = Cplx(std::move(s.value));
    res.err_bound = std::move(s.err);
    res.work.terms = s.terms;
  } else {
    auto s = j_hyper_impl<Cplx>(pt.alpha, prec);
    res.value = std::move(s.value);
    res.err_bound = std::move(s.err);
    res.work.terms = s.terms;
  }
  res.method = Method::series;
  return res;
}

Real dt_dalpha(const Real& alpha) {
  Real w = Real(4) * alpha * (Real(1) - alpha);
  Real num = ldexp(alpha, 1) - Real(1);
  return ldexp(num * num * num, 1) / (w * sqrt(w));
}

Real presumed_equality_residual(const Real& alpha, const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  Real astar = alpha_star();
  if (alpha.sign() <= 0 || alpha >= astar) {
    throw DomainError("presumed_equality_residual: alpha must lie strictly in (0, (sqrt(2)-1)^2)");
  }

  Real t = alpha_to_t(alpha);
  Real lhs = g_closed(t, prec).real() * dt_dalpha(alpha);

  Real omal = Real(1) - alpha;
  Real opal = Real(1) + alpha;
  Real z1 = Real(4) * alpha * omal;
  Real z2 = -(Real(4) * alpha) / (omal * omal);
  Real opal2 = opal * opal;
  Real z3 = Real(16) * alpha * omal * omal / (opal2 * opal2);

  mpq_class h(1, 2), q4(1, 4), q34(3, 4);
  Real f1 = pfq(HyperSeriesSpec::f32(h, h, h, 1, 1, Cplx(z1)), prec).real();
  Real f2 = pfq(HyperSeriesSpec::f32(h, h, h, 1, 1, Cplx(z2)), prec).real();
  Real f3 = pfq(HyperSeriesSpec::f32(q4, h, q34, 1, 1, Cplx(z3)), prec).real();

  Real two_a_omal = ldexp(alpha * omal, 1);
  Real rhs = -(Real(11) * (Real(1) - ldexp(alpha, 1)) / two_a_omal) * f1 +
             (Real(7) * opal / two_a_omal) * f2 +
             (Real(3) * (Real(1) - Real(6) * alpha + alpha * alpha) /
              (ldexp(alpha * (Real(1) - alpha * alpha), 1))) *
                 f3;
  return abs(lhs - rhs);
}

}  // namespace jpotts
