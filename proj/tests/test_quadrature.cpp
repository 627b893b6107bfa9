#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "jpotts/errors.hpp"
#include "jpotts/greens.hpp"
#include "jpotts/modular.hpp"
#include "jpotts/quadrature.hpp"

using namespace jpotts;

namespace {
double jd(double t, const CubatureGrid& g) { return j_direct(t, g).real().to_double(); }
double gd(double t, const CubatureGrid& g) { return g_direct(t, g).real().to_double(); }
}  // namespace

TEST_CASE("axes reproduce single-variable integrals") {
  for (QuadRule rule : {QuadRule::gauss_legendre, QuadRule::tanh_sinh}) {
    CubatureGrid grid;
    grid.rule = rule;
    Axis ax = make_axis(grid, 1);
    double sum = 0.0, sinsum = 0.0;
    for (size_t i = 0; i < ax.w.size(); ++i) {
      sum += ax.w[i];
      sinsum += ax.w[i] * std::sin(ax.k[i]);
    }
    CHECK(std::abs(sum - 3.14159265358979324) < 1e-13);  // Int_0^pi dk
    CHECK(std::abs(sinsum - 2.0) < 1e-12);               // Int_0^pi sin
    // e = 1 - cos k matches
    for (size_t i = 0; i < ax.k.size(); i += 7) {
      CHECK(std::abs(ax.e[i] - (1.0 - std::cos(ax.k[i]))) < 1e-15);
    }
  }
}

TEST_CASE("kernel argument is exactly permutation invariant") {
  const double t = 2.37;
  const double e[3] = {1.993211, 0.004217, 0.750933};
  const double base = kernel_argument(t, e[0], e[1], e[2]);
  int idx[3] = {0, 1, 2};
  std::sort(idx, idx + 3);
  do {
    CHECK(kernel_argument(t, e[idx[0]], e[idx[1]], e[idx[2]]) == base);
  } while (std::next_permutation(idx, idx + 3));
  // positivity at the cube minimum: argument >= t - 2
  CHECK(kernel_argument(2.0 + 1e-9, 0.0, 0.0, 2.0) >= 1e-9 * (1 - 1e-12));
}

TEST_CASE("large-t asymptotes") {
  CubatureGrid grid;
  CHECK(std::abs(jd(1e6, grid) - std::log(1e6)) < 1e-10);
  CHECK(std::abs(gd(1e6, grid) - 1e-6) < 1e-12);
}

TEST_CASE("direct Green values against the closed form") {
  PrecisionConfig prec{.digits = 25};
  for (double t : {2.5, 3.0}) {
    auto closed = g_closed(Real(t), prec);
    CHECK(std::abs(gd(t, default_grid_for(t)) - closed.real().to_double()) < 1e-10);
  }
}

TEST_CASE("central difference of J lands on G") {
  CHECK(j_derivative_check(3.0, 1e-3, default_grid_for(3.0)) < 1e-6);
  CHECK(j_derivative_check(5.0, 1e-3, default_grid_for(5.0)) < 1e-7);
  CHECK_THROWS_AS(j_derivative_check(2.0005, 1e-3, default_grid_for(2.0005)), DomainError);
}

TEST_CASE("monotonicity on the real ray") {
  CubatureGrid grid;
  double prev_j = -1e9, prev_g = 1e9;
  for (double t : {2.25, 2.6, 3.0, 4.0, 6.0}) {
    double vj = jd(t, grid), vg = gd(t, grid);
    CHECK(vj > prev_j);
    CHECK(vg < prev_g);
    prev_j = vj;
    prev_g = vg;
  }
}

TEST_CASE("panel refinement shrinks the error estimate by 4x or better") {
  // Low order keeps both grids in the pre-asymptotic regime where the
  // Richardson estimate is meaningful (the default grid is already at the
  // double-precision floor for t >= 2.2).
  CubatureGrid coarse;
  coarse.order = 6;
  coarse.panels = 1;
  CubatureGrid finer = coarse;
  finer.panels = 2;
  auto e1 = j_direct(2.2, coarse).err_bound.to_double();
  auto e2 = j_direct(2.2, finer).err_bound.to_double();
  CHECK(e2 * 4.0 <= e1);
}

TEST_CASE("budget and domain guards") {
  CubatureGrid grid;
  grid.node_budget = 1000;
  CHECK_THROWS_AS(j_direct(3.0, grid), BudgetError);
  CubatureGrid ok;
  CHECK_THROWS_AS(j_direct(1.9, ok), DomainError);
  CHECK_THROWS_AS(j_direct(2.0, ok), DomainError);  // GL rule at the endpoint
  CHECK_THROWS_AS(g_direct(2.0, default_grid_for(2.0)), DomainError);
  CHECK_THROWS_AS(g_direct(1.5, ok), DomainError);
}

TEST_CASE("t = 2 endpoint under tanh-sinh matches the closed form") {
  PrecisionConfig prec{.digits = 25};
  auto r = j_direct(2.0, default_grid_for(2.0));
  CHECK(r.singular_endpoint);
  CHECK(r.method == Method::tanh_sinh);
  auto ref = j_special(SpecialT::two, prec);
  CHECK(std::abs(r.real().to_double() - ref.real().to_double()) < 2e-5);
}

TEST_CASE("symmetry-reduced and full sums agree") {
  CubatureGrid reduced;
  reduced.order = 16;
  reduced.panels = 2;
  CubatureGrid full = reduced;
  full.use_symmetry = false;
  for (double t : {2.4, 3.7}) {
    CHECK(std::abs(jd(t, reduced) - jd(t, full)) < 1e-13);
    CHECK(std::abs(gd(t, reduced) - gd(t, full)) < 1e-13);
  }
}

TEST_CASE("near-endpoint tanh-sinh evaluation stays finite and sane") {
  auto r = j_direct(2.006337, default_grid_for(2.006337));
  CHECK(r.real().to_double() > 0.25);
  CHECK(r.real().to_double() < 0.30);
  CHECK(!r.singular_endpoint);
}
