#pragma once

#include <vector>

#include "jpotts/eval.hpp"

namespace jpotts {

enum class QuadRule { gauss_legendre, tanh_sinh };

// Tensor-product cubature grid over [0,pi]^3. Both rules place
// order * panels nodes per axis so the budget accounting is uniform.
struct CubatureGrid {
  int order = 32;
  QuadRule rule = QuadRule::gauss_legendre;
  int panels = 4;
  long long node_budget = 1'500'000'000;  // cap on (points per axis)^3, refinement included
  bool use_symmetry = true;               // sum over sorted index triples only

  int points_per_axis() const { return order * panels; }
  void validate() const;
};

// Gauss-Legendre nodes/weights on (-1,1), ascending, cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_rule(int order);

// One quadrature axis on [0,pi]: abscissae, weights and e = 1 - cos(k)
// evaluated stably as 2 sin^2(k/2).
struct Axis {
  std::vector<double> k, w, e;
};
Axis make_axis(const CubatureGrid& grid, int panel_scale);

// Kernel argument t - c1 - c2 - c3 + c1 c2 c3 in the cancellation-free form
// (t - 2) + e1 e2 + e2 e3 + e3 e1 - e1 e2 e3. Inputs are sorted internally,
// so the value is exactly invariant under argument permutations.
double kernel_argument(double t, double e1, double e2, double e3);

// (1/pi^3) Int log(t - c1 - c2 - c3 + c1 c2 c3) over [0,pi]^3. Needs t > 2;
// t = 2 is admitted under the tanh-sinh rule only (integrable log edge
// singularity) and flags the result as singular_endpoint. The error bound is
// the difference against a grid with doubled panel count; the refined value
// is returned.
EvalResult j_direct(double t, const CubatureGrid& grid);

// Same with kernel 1/(t - ...). Strictly t > 2: the reciprocal integral
// diverges at t = 2.
EvalResult g_direct(double t, const CubatureGrid& grid);

// |central difference of j_direct - g_direct(t)| with step h.
double j_derivative_check(double t, double h, const CubatureGrid& grid);

// Default grid per the rule-selection policy: Gauss-Legendre 32x4 for
// t >= 2.2, tanh-sinh below (and at t = 2).
CubatureGrid default_grid_for(double t);

}  // namespace jpotts
