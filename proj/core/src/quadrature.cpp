#include "jpotts/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "jpotts/errors.hpp"

namespace jpotts {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Truncation abscissa for the tanh-sinh map: beyond it the node offsets from
// the interval ends drop under double precision resolution.
constexpr double kTsCut = 3.25;

std::pair<std::vector<double>, std::vector<double>> build_gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {std::move(x), std::move(w)};
}

double triple_multiplicity(int a, int b, int c) {
  if (a == b && b == c) return 1.0;
  if (a == b || b == c) return 3.0;
  return 6.0;
}

// Kahan-compensated accumulator.
struct Acc {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

template <class F>
double cubature_reduced(const Axis& ax, double t, const F& f, long* evals) {
  const int m = static_cast<int>(ax.k.size());
  Acc total;
  long n = 0;
  for (int a = 0; a < m; ++a) {
    Acc row;
    for (int b = a; b < m; ++b) {
      const double wab = ax.w[a] * ax.w[b];
      for (int c = b; c < m; ++c) {
        row.add(triple_multiplicity(a, b, c) * wab * ax.w[c] *
                f(kernel_argument(t, ax.e[a], ax.e[b], ax.e[c])));
        ++n;
      }
    }
    total.add(row.s);
  }
  if (evals) *evals += n;
  return total.s;
}

template <class F>
double cubature_full(const Axis& ax, double t, const F& f, long* evals) {
  const int m = static_cast<int>(ax.k.size());
  Acc total;
  long n = 0;
  for (int a = 0; a < m; ++a) {
    Acc row;
    for (int b = 0; b < m; ++b) {
      const double wab = ax.w[a] * ax.w[b];
      for (int c = 0; c < m; ++c) {
        row.add(wab * ax.w[c] * f(kernel_argument(t, ax.e[a], ax.e[b], ax.e[c])));
        ++n;
      }
    }
    total.add(row.s);
  }
  if (evals) *evals += n;
  return total.s;
}

template <class F>
EvalResult integrate_kernel(double t, const CubatureGrid& grid, const F& f, Method method) {
  grid.validate();
  const double fine_ppa = 2.0 * grid.points_per_axis();
  if (fine_ppa * fine_ppa * fine_ppa > static_cast<double>(grid.node_budget)) {
    throw BudgetError("cubature: refined grid exceeds the node budget");
  }

  long evals = 0;
  const double inv_pi3 = 1.0 / (kPi * kPi * kPi);
  Axis coarse_ax = make_axis(grid, 1);
  Axis fine_ax = make_axis(grid, 2);
  double coarse, fine;
  if (grid.use_symmetry) {
    coarse = cubature_reduced(coarse_ax, t, f, &evals) * inv_pi3;
    fine = cubature_reduced(fine_ax, t, f, &evals) * inv_pi3;
  } else {
    coarse = cubature_full(coarse_ax, t, f, &evals) * inv_pi3;
    fine = cubature_full(fine_ax, t, f, &evals) * inv_pi3;
  }

  EvalResult res;
  res.value = Cplx(Real(fine), Real(0));
  // Roundoff floor: the kernel carries a few ulp per node, so grid agreement
  // does not certify better than ~1e-15 absolute.
  res.err_bound = Real(std::max(std::abs(fine - coarse), 2e-15 * (1.0 + std::abs(fine))));
  res.method = method;
  res.work.nodes = evals;
  return res;
}

}  // namespace

void CubatureGrid::validate() const {
  if (order < 2 || panels < 1) {
    throw DomainError("CubatureGrid: order >= 2 and panels >= 1 required");
  }
  const double ppa = points_per_axis();
  if (ppa * ppa * ppa > static_cast<double>(node_budget)) {
    throw BudgetError("CubatureGrid: (order * panels)^3 exceeds the node budget");
  }
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_rule(int order) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, build_gauss_legendre(order)).first;
  }
  return it->second;
}

Axis make_axis(const CubatureGrid& grid, int panel_scale) {
  Axis ax;
  if (grid.rule == QuadRule::gauss_legendre) {
    const int panels = grid.panels * panel_scale;
    const auto& [xs, ws] = gauss_legendre_rule(grid.order);
    const double hw = kPi / (2.0 * panels);
    ax.k.reserve(static_cast<size_t>(panels) * grid.order);
    for (int p = 0; p < panels; ++p) {
      const double mid = (2.0 * p + 1.0) * hw;
      for (int i = 0; i < grid.order; ++i) {
        ax.k.push_back(mid + hw * xs[i]);
        ax.w.push_back(hw * ws[i]);
      }
    }
  } else {
    // Tanh-sinh map of (-1,1) onto (0,pi). Offsets from the endpoints are
    // computed through exp(-2x) so extreme nodes never collapse onto them.
    const int half = std::max(8, grid.points_per_axis() * panel_scale / 2);
    const double h = kTsCut / half;
    for (int j = -half; j <= half; ++j) {
      const double tau = j * h;
      const double x = 0.5 * kPi * std::sinh(std::abs(tau));
      const double em = std::exp(-2.0 * x);
      const double off = 2.0 * em / (1.0 + em);  // 1 - |tanh(x)|
      const double k = (j < 0) ? 0.5 * kPi * off : kPi - 0.5 * kPi * off;
      const double ch = std::cosh(x);
      const double w = h * 0.25 * kPi * kPi * std::cosh(tau) / (ch * ch);
      ax.k.push_back(k);
      ax.w.push_back(w);
    }
  }
  ax.e.reserve(ax.k.size());
  for (double k : ax.k) {
    const double s = std::sin(0.5 * k);
    ax.e.push_back(2.0 * s * s);
  }
  return ax;
}

double kernel_argument(double t, double e1, double e2, double e3) {
  if (e1 < e2) std::swap(e1, e2);
  if (e2 < e3) std::swap(e2, e3);
  if (e1 < e2) std::swap(e1, e2);
  return (t - 2.0) + (e1 * e2 + e2 * e3 + e3 * e1) - e1 * e2 * e3;
}

EvalResult j_direct(double t, const CubatureGrid& grid) {
  if (t < 2.0) {
    throw DomainError("j_direct: t must satisfy t > 2 (t = 2 under tanh-sinh only)");
  }
  if (t == 2.0 && grid.rule != QuadRule::tanh_sinh) {
    throw DomainError("j_direct: the t = 2 endpoint requires the tanh-sinh rule");
  }
  EvalResult res = integrate_kernel(
      t, grid, [](double arg) { return std::log(arg); },
      grid.rule == QuadRule::gauss_legendre ? Method::gauss_legendre : Method::tanh_sinh);
  res.singular_endpoint = (t == 2.0);
  return res;
}

EvalResult g_direct(double t, const CubatureGrid& grid) {
  if (t <= 2.0) {
    throw DomainError("g_direct: t must satisfy t > 2 (integral diverges at t = 2)");
  }
  return integrate_kernel(
      t, grid, [](double arg) { return 1.0 / arg; },
      grid.rule == QuadRule::gauss_legendre ? Method::gauss_legendre : Method::tanh_sinh);
}

double j_derivative_check(double t, double h, const CubatureGrid& grid) {
  if (t - h <= 2.0) {
    throw DomainError("j_derivative_check: need t - h > 2");
  }
  const double jp = j_direct(t + h, grid).real().to_double();
  const double jm = j_direct(t - h, grid).real().to_double();
  const double g = g_direct(t, grid).real().to_double();
  return std::abs((jp - jm) / (2.0 * h) - g);
}

CubatureGrid default_grid_for(double t) {
  CubatureGrid grid;
  if (t < 2.2) {
    grid.rule = QuadRule::tanh_sinh;
    grid.order = 32;
    grid.panels = 5;
  }
  return grid;
}

}  // namespace jpotts
