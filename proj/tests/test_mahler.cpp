#include <doctest.h>

#include <cmath>

#include "jpotts/errors.hpp"
#include "jpotts/jformula.hpp"
#include "jpotts/mahler.hpp"
#include "jpotts/quadrature.hpp"

using namespace jpotts;

namespace {
double measure(const LaurentPoly& p, const CubatureGrid& g) {
  return mahler_measure(p, g).real().to_double();
}
}  // namespace

TEST_CASE("constant polynomial is the harness self-test") {
  CubatureGrid grid = default_mahler_grid(MahlerFamily::constant);
  grid.panels = 1;
  CHECK(std::abs(measure(LaurentPoly::constant(7.0), grid) - std::log(7.0)) < 1e-14);
  CHECK(std::abs(measure(LaurentPoly::constant(-0.5), grid) - std::log(0.5)) < 1e-14);
  // below the zero floor
  CHECK_THROWS_AS(mahler_measure(LaurentPoly::constant(1e-9), grid), ZeroOnTorusError);
}

TEST_CASE("family parameter validation") {
  CubatureGrid grid = default_mahler_grid(MahlerFamily::p1);
  CHECK_THROWS_AS(mahler_measure(LaurentPoly::p1(0.2), grid), DomainError);
  CHECK_THROWS_AS(mahler_measure(LaurentPoly::p4(0.0), grid), DomainError);
  CHECK_THROWS_AS(mahler_measure(LaurentPoly::p5(3.9), grid), DomainError);
  CubatureGrid ts = grid;
  ts.rule = QuadRule::tanh_sinh;
  CHECK_THROWS_AS(mahler_measure(LaurentPoly::p5(5.0), ts), DomainError);
}

TEST_CASE("m(P5(5)) = log 2 + J(5/2)") {
  CubatureGrid grid = default_mahler_grid(MahlerFamily::p5);
  auto jd = j_direct(2.5, default_grid_for(2.5));
  double lhs = measure(LaurentPoly::p5(5.0), grid);
  CHECK(std::abs(lhs - (std::log(2.0) + jd.real().to_double())) < 1e-7);
}

TEST_CASE("m(P1(alpha)) = log 8 + J(t(alpha))") {
  PrecisionConfig prec{.digits = 30};
  CubatureGrid grid = default_mahler_grid(MahlerFamily::p1);
  for (double alpha : {0.05, 0.1}) {
    PrecisionScope scope(prec.working());
    double bridge = (Real(3) * const_log2() +
                     j_hyper(AlphaPoint::make(Real(alpha)), prec).real())
                        .to_double();
    CHECK(std::abs(measure(LaurentPoly::p1(alpha), grid) - bridge) < 1e-7);
  }
}

TEST_CASE("scaling law m(cP) = log|c| + m(P)") {
  CubatureGrid grid = default_mahler_grid(MahlerFamily::p5);
  grid.panels = 3;
  LaurentPoly base = LaurentPoly::p5(5.0);
  double m0 = measure(base, grid);
  for (double c : {2.0, 10.0}) {
    LaurentPoly scaled = base;
    scaled.scale = c;
    CHECK(std::abs(measure(scaled, grid) - (std::log(c) + m0)) < 1e-12);
  }
}

TEST_CASE("four-term identity residual") {
  CubatureGrid grid = default_mahler_grid(MahlerFamily::p4);
  CHECK(mahler_identity_residual(0.1, grid) < 1e-6);
  CHECK(mahler_identity_residual(0.05, grid) < 1e-6);
}

TEST_CASE("four-term identity at the right endpoint") {
  // P4 touches zero on the torus there; convergence is slower.
  CubatureGrid grid = default_mahler_grid(MahlerFamily::p4);
  const double astar = 3.0 - 2.0 * std::sqrt(2.0);
  CHECK(mahler_identity_residual(astar, grid) < 1e-5);
}

TEST_CASE("conjugation pairing kills the imaginary part of log P3") {
  // arg P3(x,y,z) + arg conj(P3)(x,y,z) = 0 pointwise, so the quadrature of
  // the imaginary part of log P3 over conjugate pairs vanishes identically.
  const double alpha = 0.1;
  const double c3 = 4.0 * (1.0 - alpha) / std::sqrt(alpha);
  double acc = 0.0;
  for (double ccc : {0.93, -0.2, 0.004, -0.77}) {
    acc += std::atan2(c3, 8.0 * ccc) + std::atan2(-c3, 8.0 * ccc);
  }
  CHECK(std::abs(acc) < 1e-12);
  // and the measure itself is real and finite
  CubatureGrid grid = default_mahler_grid(MahlerFamily::p3);
  grid.panels = 3;
  auto r = mahler_measure(LaurentPoly::p3(alpha), grid);
  CHECK(r.value.im.is_zero());
  CHECK(r.real().is_finite());
}

TEST_CASE("bridge to the 5F4 route") {
  PrecisionConfig prec{.digits = 30};
  CubatureGrid grid = default_mahler_grid(MahlerFamily::p5);
  for (double k : {5.0, 6.0}) {
    auto [via_torus, via_formula] = mahler_to_j(k, grid, prec);
    CHECK(std::abs(via_torus - via_formula) < 1e-7);
  }
  // far out on the ray both routes approach log k
  auto [big_torus, big_formula] = mahler_to_j(10000.0, grid, prec);
  CHECK(std::abs(big_torus - big_formula) < 1e-7);
  CHECK(std::abs(big_torus - std::log(10000.0)) < 1e-3);
  CHECK_THROWS_AS(mahler_to_j(4.05, grid, prec), DomainError);
}
