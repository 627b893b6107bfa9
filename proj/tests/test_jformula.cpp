#include <doctest.h>

#include <cmath>

#include "jpotts/errors.hpp"
#include "jpotts/greens.hpp"
#include "jpotts/jformula.hpp"
#include "jpotts/quadrature.hpp"

using namespace jpotts;

TEST_CASE("parameter map forward values") {
  PrecisionScope scope(40);
  // alpha = 1/2 gives w = 1 and t = 2
  CHECK(abs(alpha_to_t(Real(mpq_class(1, 2))) - Real(2)) < pow10(-38));
  // alpha = 0.1: w = 0.36, t = 0.6 + 1/0.6 = 34/15
  CHECK(abs(alpha_to_t(Real(mpq_class(1, 10))) - Real(34) / 15L) < pow10(-37));
  // right endpoint lands at 2.0802... (four quoted digits)
  CHECK(abs(validity_t_min() - Real("2.0802")) < Real(1e-4));
  CHECK_THROWS_AS(alpha_to_t(Real(0)), PoleError);
  CHECK_THROWS_AS(alpha_to_t(Cplx(Real(1), Real(0))), PoleError);
}

TEST_CASE("endpoint algebra at 50 digits") {
  PrecisionScope scope(50);
  Real a = alpha_star();
  Real omal2 = (Real(1) - a) * (Real(1) - a);
  Real opal2 = (Real(1) + a) * (Real(1) + a);
  Real z3 = Real(16) * a * omal2 / (opal2 * opal2);
  CHECK(abs(z3 - Real(1)) < pow10(-48));
  // and the second argument is exactly -1 there
  Real z2 = Real(-4) * a / omal2;
  CHECK(abs(z2 + Real(1)) < pow10(-48));
}

TEST_CASE("inverse map and round trips") {
  PrecisionScope scope(40);
  CHECK(abs(t_to_alpha(Real(34) / 15L) - Real(mpq_class(1, 10))) < pow10(-36));
  CHECK(abs(t_to_alpha(validity_t_min()) - alpha_star()) < pow10(-33));
  CHECK_THROWS_AS(t_to_alpha(Real(2)), DomainError);
  CHECK_THROWS_AS(t_to_alpha(Real("2.07")), DomainError);
  for (int i = 1; i <= 12; ++i) {
    Real alpha = Real("0.001") + (alpha_star() - Real("0.001")) * static_cast<long>(i) / 12L;
    CHECK(abs(t_to_alpha(alpha_to_t(alpha)) - alpha) < pow10(-(40 - 5)));
  }
}

TEST_CASE("region classification") {
  PrecisionScope scope(30);
  CHECK(AlphaPoint::make(Real("0.1")).region == AlphaRegion::real_valid);
  CHECK(AlphaPoint::make(alpha_star()).region == AlphaRegion::real_valid);
  CHECK(AlphaPoint::make(Real("0.2")).region == AlphaRegion::invalid);
  CHECK(AlphaPoint::make(Real(0)).region == AlphaRegion::invalid);
  CHECK(AlphaPoint::make(Real("-0.1")).region == AlphaRegion::complex_small);
  CHECK(AlphaPoint::make(Cplx(Real("0.05"), Real("0.05"))).region == AlphaRegion::complex_small);
  CHECK(AlphaPoint::make(Cplx(Real("0.2"), Real("0.2"))).region == AlphaRegion::invalid);
}

TEST_CASE("5F4 route against the cubature oracle") {
  PrecisionConfig prec{.digits = 30};
  PrecisionScope scope(prec.working());
  Real alpha("0.1");
  auto jh = j_hyper(AlphaPoint::make(alpha), prec);
  double t = alpha_to_t(alpha).to_double();
  auto jd = j_direct(t, default_grid_for(t));
  CHECK(abs(jh.real() - jd.real()) < Real(1e-8));
}

TEST_CASE("oracle agreement stays within the combined claimed bounds") {
  for (int i = 0; i < 4; ++i) {
    const bool endpoint = (i == 3);
    PrecisionConfig prec{.digits = endpoint ? 6 : 30};
    PrecisionScope scope(prec.working());
    const char* labels[3] = {"0.05", "0.1", "0.15"};
    Real alpha = endpoint ? alpha_star() : Real(labels[i]);
    auto jh = j_hyper(AlphaPoint::make(alpha), prec);
    double t = alpha_to_t(alpha).to_double();
    auto jd = j_direct(t, default_grid_for(t));
    CHECK(abs(jh.real() - jd.real()) <= jh.err_bound + jd.err_bound);
  }
}

TEST_CASE("small-alpha asymptotics J = -log(2 sqrt(alpha)) + O(alpha)") {
  PrecisionConfig prec{.digits = 30};
  PrecisionScope scope(prec.working());
  Real a1("1e-6");
  Real v1 = j_hyper(AlphaPoint::make(a1), prec).real() + ldexp(log(Real(4) * a1), -1);
  CHECK(abs(v1) < Real(1e-4));
  Real a2("1e-9");
  Real v2 = j_hyper(AlphaPoint::make(a2), prec).real() + ldexp(log(Real(4) * a2), -1);
  CHECK(abs(v2) < Real(1e-7));
}

TEST_CASE("derivative of the 5F4 route equals G dt/dalpha") {
  PrecisionConfig prec{.digits = 40};
  PrecisionScope scope(prec.working());
  Real alpha("0.08");
  // With h = 1e-6 the O(h^2) truncation term alone is ~2e-10 here (the third
  // derivative of J(t(alpha)) is of order 10^3), so the step is taken one
  // decade smaller than the comparison scale suggests.
  Real h("1e-7");
  auto plus = j_hyper(AlphaPoint::make(alpha + h), prec);
  auto minus = j_hyper(AlphaPoint::make(alpha - h), prec);
  Real fd = (plus.real() - minus.real()) / ldexp(h, 1);
  Real exact = g_closed(alpha_to_t(alpha), prec).real() * dt_dalpha(alpha);
  CHECK(abs(fd - exact) < Real(1e-10));
}

TEST_CASE("differentiated identity residuals") {
  PrecisionConfig prec{.digits = 30};
  PrecisionScope scope(prec.working());
  CHECK(presumed_equality_residual(Real("0.05"), prec) < pow10(-20));
  CHECK(presumed_equality_residual(Real("0.15"), prec) < pow10(-20));
  CHECK_THROWS_AS(presumed_equality_residual(Real(0), prec), DomainError);
  CHECK_THROWS_AS(presumed_equality_residual(alpha_star(), prec), DomainError);
}

TEST_CASE("near-endpoint residual converges, slower") {
  PrecisionConfig prec{.digits = 30};
  PrecisionScope scope(prec.working());
  CHECK(presumed_equality_residual(Real("0.171"), prec) < pow10(-12));
}

TEST_CASE("complex alpha inside the small disk") {
  PrecisionConfig prec{.digits = 25};
  PrecisionScope scope(prec.working());
  Cplx alpha(Real("0.04"), Real("0.03"));
  auto j1 = j_hyper(AlphaPoint::make(alpha), prec);
  CHECK(j1.value.is_finite());
  auto j2 = j_hyper(AlphaPoint::make(alpha.conj()), prec);
  CHECK(abs(j2.value - j1.value.conj()) < pow10(-22));
  // outside the accepted region
  CHECK_THROWS_AS(j_hyper(AlphaPoint::make(Real("0.25")), prec), DomainError);
  // inside the disk but with a series argument outside the unit disk
  CHECK_THROWS_AS(j_hyper(AlphaPoint::make(Real("-0.1")), prec), DivergenceError);
}

TEST_CASE("endpoint evaluation against the oracle") {
  PrecisionConfig prec{.digits = 6};
  auto jh = j_hyper(AlphaPoint::make(alpha_star()), prec);
  CHECK((jh.method == Method::series || jh.method == Method::series_endpoint));
  double t = validity_t_min().to_double();
  auto jd = j_direct(t, default_grid_for(t));
  CHECK(std::abs(jh.real().to_double() - jd.real().to_double()) < 1e-6);
}
