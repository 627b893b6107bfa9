#include "jpotts/greens.hpp"

#include "jpotts/errors.hpp"
#include "jpotts/hyper.hpp"

namespace jpotts {

EvalResult g_closed(const Cplx& t, const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  if (t.is_real()) {
    return g_closed(t.re, prec);
  }
  Cplx z = Real(4) / (t * t);
  if (abs(z) >= Real(1)) {
    throw DivergenceError("g_closed: |4/t^2| >= 1, closed form not applicable");
  }
  auto f = pfq(HyperSeriesSpec::f21(mpq_class(1, 8), mpq_class(5, 8), 1, z), prec);
  Cplx quarter = exp(Cplx(Real(-0.25)) * log(Cplx(Real(1)) - z));
  Cplx value = f.value * f.value * quarter / t;

  EvalResult res;
  res.err_bound = abs(value) * (Real(2) * f.err_bound / abs(f.value)) +
                  abs(value) * pow10(-(prec.digits + 6));
  res.value = std::move(value);
  res.method = Method::closed_form;
  res.work = f.work;
  return res;
}

EvalResult g_closed(const Real& t, const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  Real at = abs(t);
  if (at <= Real(2)) {
    throw CutError("g_closed: real t lies on the cut [-2,2]");
  }
  Real z = Real(4) / (t * t);
  auto f = pfq(HyperSeriesSpec::f21(mpq_class(1, 8), mpq_class(5, 8), 1, Cplx(z)), prec);
  Real fr = f.real();
  Real value = fr * fr / (rootn(Real(1) - z, 4) * t);

  EvalResult res;
  res.err_bound = abs(value) * (Real(2) * f.err_bound / abs(fr)) +
                  abs(value) * pow10(-(prec.digits + 6));
  res.value = Cplx(std::move(value));
  res.method = Method::closed_form;
  res.work = f.work;
  return res;
}

}  // namespace jpotts
