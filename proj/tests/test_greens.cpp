#include <doctest.h>

#include <vector>

#include "jpotts/errors.hpp"
#include "jpotts/greens.hpp"
#include "jpotts/quadrature.hpp"
#include "oracles.hpp"

using namespace jpotts;

TEST_CASE("t G(t) -> 1 at large t") {
  PrecisionConfig prec{.digits = 30};
  PrecisionScope scope(prec.working());
  Real t("1e8");
  CHECK(abs(g_closed(t, prec).real() * t - Real(1)) < pow10(-14));
}

TEST_CASE("closed form factors through the 2F1(1/2,1/2;1;alpha) chain") {
  // at t(alpha=0.1) = 34/15: G = ((1+4a-4a^2)/(1-2a)) [2F1(1/2,1/2;1;a)]^2 / t
  PrecisionConfig prec{.digits = 30};
  PrecisionScope scope(prec.working());
  Real alpha("0.1");
  Real t = Real(34) / 15L;
  Real f = oracles::gauss_2f1_half_agm(alpha);
  Real via_chain = (Real(1) + 4L * alpha - 4L * alpha * alpha) / (Real(1) - 2L * alpha) * f * f / t;
  CHECK(abs(g_closed(t, prec).real() - via_chain) < pow10(-25));
}

TEST_CASE("real and positive on the ray, negative below -2, cut rejected") {
  PrecisionConfig prec{.digits = 20};
  PrecisionScope scope(prec.working());
  for (double t : {2.05, 2.5, 4.0, 50.0}) {
    auto g = g_closed(Real(t), prec);
    CHECK(g.value.im.is_zero());
    CHECK(g.real().sign() > 0);
  }
  CHECK(g_closed(Real(-3), prec).real().sign() < 0);
  CHECK_THROWS_AS(g_closed(Real(1.5), prec), CutError);
  CHECK_THROWS_AS(g_closed(Real(-2), prec), CutError);
  CHECK_THROWS_AS(g_closed(Cplx(Real(1), Real("0.5")), prec), DivergenceError);
  auto off_cut = g_closed(Cplx(Real(2), Real(2)), prec);
  CHECK(off_cut.value.is_finite());
}

TEST_CASE("series coefficients of t G(t) equal the exact lattice moments") {
  // Multinomial moments of (c1+c2+c3 - c1c2c3)^{2m} against the exact
  // rational expansion of (1-x)^{-1/4} [2F1(1/8,5/8;1;x)]^2 with x = 4/t^2.
  auto coeffs = oracles::green_series_coeffs(7);
  mpz_class four(1);
  for (unsigned long m = 0; m <= 6; ++m) {
    mpq_class lhs = oracles::lattice_moment(2 * m);
    mpq_class rhs = coeffs[m] * mpq_class(four);
    CHECK(lhs == rhs);
    four *= 4;
  }
}

TEST_CASE("moments recovered from closed-form values, chained to the oracle") {
  PrecisionConfig prec{.digits = 40};
  PrecisionScope scope(prec.working());
  const std::vector<double> ts{50.0, 100.0, 200.0, 400.0};
  // Solve the 4x4 Vandermonde t G = m0 + m2 x + m4 x^2 + m6 x^3, x = 4/t^2.
  std::vector<std::vector<Real>> A;
  std::vector<Real> b;
  for (double td : ts) {
    Real t(td);
    Real x = Real(4) / (t * t);
    A.push_back({Real(1), x, x * x, x * x * x});
    b.push_back(g_closed(t, prec).real() * t);
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
    }
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      Real f = A[r][col] / A[col][col];
      for (int c2 = col; c2 < 4; ++c2) A[r][c2] -= f * A[col][c2];
      b[r] -= f * b[col];
    }
  }
  // Fitted coefficients sit in x = 4/t^2, so coefficient m is mu_{2m}/4^m;
  // the cubic truncation contaminates the higher ones progressively.
  Real r0 = b[0] / A[0][0], r1 = b[1] / A[1][1], r2 = b[2] / A[2][2], r3 = b[3] / A[3][3];
  CHECK(abs(r0 - Real(1)) < pow10(-12));
  CHECK(abs(r1 - Real(mpq_class(oracles::lattice_moment(2) / 4))) < Real(1e-9));
  CHECK(abs(r2 - Real(mpq_class(oracles::lattice_moment(4) / 16))) < Real(1e-5));
  CHECK(abs(r3 / Real(mpq_class(oracles::lattice_moment(6) / 64)) - Real(1)) < Real(0.01));

  // and the cubature oracle sits on the closed form at the fit points
  for (double td : ts) {
    auto direct = g_direct(td, default_grid_for(td));
    CHECK(abs(direct.real() - g_closed(Real(td), prec).real()).to_double() < 1e-12);
  }
}
