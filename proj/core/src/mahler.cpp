#include "jpotts/mahler.hpp"

#include <cmath>
#include <vector>

#include "jpotts/errors.hpp"
#include "jpotts/jformula.hpp"

namespace jpotts {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAlphaStar = 3.0 - 2.0 * 1.4142135623730951;  // (sqrt(2)-1)^2
constexpr double kZeroFloor = 1e-8;

struct TorusAxis {
  std::vector<double> w, c, e, e1re, e1im, e4re, e4im;
};

TorusAxis make_torus_axis(const CubatureGrid& grid, int panel_scale) {
  TorusAxis ax;
  const int panels = grid.panels * panel_scale;
  const auto& [xs, ws] = gauss_legendre_rule(grid.order);
  const double hw = 1.0 / (2.0 * panels);
  for (int p = 0; p < panels; ++p) {
    const double mid = (2.0 * p + 1.0) * hw;
    for (int i = 0; i < grid.order; ++i) {
      const double t = mid + hw * xs[i];
      ax.w.push_back(hw * ws[i]);
      ax.c.push_back(std::cos(2.0 * kPi * t));
      const double s = std::sin(kPi * t);
      ax.e.push_back(2.0 * s * s);
      ax.e1re.push_back(std::cos(2.0 * kPi * t));
      ax.e1im.push_back(std::sin(2.0 * kPi * t));
      ax.e4re.push_back(std::cos(8.0 * kPi * t));
      ax.e4im.push_back(std::sin(8.0 * kPi * t));
    }
  }
  return ax;
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

double triple_multiplicity(int a, int b, int c) {
  if (a == b && b == c) return 1.0;
  if (a == b || b == c) return 3.0;
  return 6.0;
}

// Sum over sorted index triples of w_a w_b w_c  f(a,b,c) with multiplicity.
template <class F>
double torus_reduced(const TorusAxis& ax, const F& f, long* evals) {
  const int m = static_cast<int>(ax.w.size());
  Kahan total;
  long n = 0;
  for (int a = 0; a < m; ++a) {
    Kahan row;
    for (int b = a; b < m; ++b) {
      const double wab = ax.w[a] * ax.w[b];
      for (int c = b; c < m; ++c) {
        row.add(triple_multiplicity(a, b, c) * wab * ax.w[c] * f(a, b, c));
        ++n;
      }
    }
    total.add(row.s);
  }
  if (evals) *evals += n;
  return total.s;
}

double checked_log_abs(double p) {
  const double a = std::abs(p);
  if (a < kZeroFloor) {
    throw ZeroOnTorusError("mahler_measure: |P| fell under the zero floor at a node");
  }
  return std::log(a);
}

double integrate_family(const LaurentPoly& poly, const TorusAxis& ax, long* evals) {
  const double scale = std::abs(poly.scale);
  switch (poly.family) {
    case MahlerFamily::constant: {
      return torus_reduced(
          ax, [&](int, int, int) { return checked_log_abs(scale * poly.param); }, evals);
    }
    case MahlerFamily::p1: {
      const double w = 4.0 * poly.param * (1.0 - poly.param);
      const double t = std::sqrt(w) + 1.0 / std::sqrt(w);
      return torus_reduced(
          ax,
          [&](int a, int b, int c) {
            return checked_log_abs(scale * 8.0 * kernel_argument(t, ax.e[a], ax.e[b], ax.e[c]));
          },
          evals);
    }
    case MahlerFamily::p2: {
      const double c2 = 4.0 / std::sqrt(poly.param * (1.0 - poly.param));
      return torus_reduced(
          ax,
          [&](int a, int b, int c) {
            return checked_log_abs(scale * (c2 + 8.0 * ax.c[a] * ax.c[b] * ax.c[c]));
          },
          evals);
    }
    case MahlerFamily::p3: {
      const double c3 = 4.0 * (1.0 - poly.param) / std::sqrt(poly.param);
      const double c3sq = c3 * c3;
      return torus_reduced(
          ax,
          [&](int a, int b, int c) {
            const double prod = 8.0 * ax.c[a] * ax.c[b] * ax.c[c];
            const double n2 = c3sq + prod * prod;
            if (n2 < kZeroFloor * kZeroFloor) {
              throw ZeroOnTorusError("mahler_measure: |P| fell under the zero floor at a node");
            }
            return 0.5 * std::log(n2) + std::log(scale);
          },
          evals);
    }
    case MahlerFamily::p4: {
      const double al = poly.param;
      const double c4 = 2.0 * (1.0 + al) / std::pow(al * (1.0 - al) * (1.0 - al), 0.25);
      return torus_reduced(
          ax,
          [&](int a, int b, int c) {
            const double re4 = 1.0 + ax.e4re[a] + ax.e4re[b] + ax.e4re[c];
            const double im4 = ax.e4im[a] + ax.e4im[b] + ax.e4im[c];
            // xyz = E_a E_b E_c on the unit circle.
            const double rab = ax.e1re[a] * ax.e1re[b] - ax.e1im[a] * ax.e1im[b];
            const double iab = ax.e1re[a] * ax.e1im[b] + ax.e1im[a] * ax.e1re[b];
            const double rabc = rab * ax.e1re[c] - iab * ax.e1im[c];
            const double iabc = rab * ax.e1im[c] + iab * ax.e1re[c];
            const double pre = re4 + c4 * rabc;
            const double pim = im4 + c4 * iabc;
            const double n2 = pre * pre + pim * pim;
            if (n2 < kZeroFloor * kZeroFloor) {
              throw ZeroOnTorusError("mahler_measure: |P| fell under the zero floor at a node");
            }
            return 0.5 * std::log(n2) + std::log(scale);
          },
          evals);
    }
    case MahlerFamily::p5: {
      const double t = 0.5 * poly.param;
      return torus_reduced(
          ax,
          [&](int a, int b, int c) {
            return checked_log_abs(scale * 2.0 * kernel_argument(t, ax.e[a], ax.e[b], ax.e[c]));
          },
          evals);
    }
  }
  throw DomainError("mahler_measure: unknown family");
}

}  // namespace

void LaurentPoly::validate() const {
  if (scale == 0.0) {
    throw DomainError("LaurentPoly: zero scale");
  }
  switch (family) {
    case MahlerFamily::constant:
      return;
    case MahlerFamily::p1:
    case MahlerFamily::p2:
    case MahlerFamily::p3:
    case MahlerFamily::p4:
      if (!(param > 0.0 && param <= kAlphaStar * (1.0 + 1e-12))) {
        throw DomainError("LaurentPoly: alpha must lie in (0, (sqrt(2)-1)^2]");
      }
      return;
    case MahlerFamily::p5:
      if (!(param > 4.0)) {
        throw DomainError("LaurentPoly: k must exceed 4");
      }
      return;
  }
}

double mahler_zero_floor() { return kZeroFloor; }

EvalResult mahler_measure(const LaurentPoly& poly, const CubatureGrid& grid) {
  poly.validate();
  grid.validate();
  if (grid.rule != QuadRule::gauss_legendre) {
    throw DomainError("mahler_measure: Gauss-Legendre grids only");
  }
  const double fine_ppa = 2.0 * grid.points_per_axis();
  if (fine_ppa * fine_ppa * fine_ppa > static_cast<double>(grid.node_budget)) {
    throw BudgetError("mahler_measure: refined grid exceeds the node budget");
  }

  long evals = 0;
  const double coarse = integrate_family(poly, make_torus_axis(grid, 1), &evals);
  const double fine = integrate_family(poly, make_torus_axis(grid, 2), &evals);

  EvalResult res;
  res.value = Cplx(Real(fine));
  res.err_bound = Real(std::max(std::abs(fine - coarse), 2e-15 * (1.0 + std::abs(fine))));
  res.method = Method::gauss_legendre;
  res.work.nodes = evals;
  return res;
}

double mahler_identity_residual(double alpha, const CubatureGrid& grid) {
  const double m1 = mahler_measure(LaurentPoly::p1(alpha), grid).real().to_double();
  const double m2 = mahler_measure(LaurentPoly::p2(alpha), grid).real().to_double();
  const double m3 = mahler_measure(LaurentPoly::p3(alpha), grid).real().to_double();
  const double m4 = mahler_measure(LaurentPoly::p4(alpha), grid).real().to_double();
  return std::abs(m1 - 11.0 * m2 + 7.0 * m3 + 6.0 * m4);
}

std::pair<double, double> mahler_to_j(double k, const CubatureGrid& grid,
                                      const PrecisionConfig& prec) {
  PrecisionScope scope(prec.working());
  Real tmin = validity_t_min();
  if (!(Real(0.5 * k) >= tmin * (Real(1) - pow10(-10)))) {
    throw DomainError("mahler_to_j: k/2 must lie on the 5F4 validity ray");
  }
  const double via_torus = mahler_measure(LaurentPoly::p5(k), grid).real().to_double();
  Real alpha = t_to_alpha(Real(0.5 * k));
  Real via_formula = const_log2() + j_hyper(AlphaPoint::make(alpha), prec).real();
  return {via_torus, via_formula.to_double()};
}

CubatureGrid default_mahler_grid(MahlerFamily family) {
  CubatureGrid grid;
  grid.order = 32;
  grid.panels = (family == MahlerFamily::p4) ? 10 : 6;
  return grid;
}

}  // namespace jpotts
