#pragma once

#include <utility>

#include "jpotts/eval.hpp"
#include "jpotts/quadrature.hpp"

namespace jpotts {

// The parametric Laurent polynomial families whose Mahler measures enter the
// four-term identity and the J bridge. Kernels are hard-coded in cosine form
// (x + 1/x -> 2 cos 2 pi t); there is no general Laurent parser here.
enum class MahlerFamily {
  constant,  // P = c                                  (harness self-test)
  p1,        // 8 sqrt(w) + 8/sqrt(w) - 4 Sum(x+1/x) + Prod(x+1/x), w = 4a(1-a)
  p2,        // 4/sqrt(a(1-a)) + Prod(x+1/x)
  p3,        // 4i(1-a)/sqrt(a) + Prod(x+1/x)
  p4,        // x^4+y^4+z^4+1 + (2(1+a)/(a(1-a)^2)^{1/4}) xyz
  p5,        // k - Sum(x+1/x) + (1/4) Prod(x+1/x)
};

struct LaurentPoly {
  MahlerFamily family = MahlerFamily::constant;
  double param = 1.0;   // alpha for p1..p4, k for p5, c for constant
  double scale = 1.0;   // overall multiplier, m(c P) = log|c| + m(P)

  static LaurentPoly constant(double c) { return {MahlerFamily::constant, c, 1.0}; }
  static LaurentPoly p1(double alpha) { return {MahlerFamily::p1, alpha, 1.0}; }
  static LaurentPoly p2(double alpha) { return {MahlerFamily::p2, alpha, 1.0}; }
  static LaurentPoly p3(double alpha) { return {MahlerFamily::p3, alpha, 1.0}; }
  static LaurentPoly p4(double alpha) { return {MahlerFamily::p4, alpha, 1.0}; }
  static LaurentPoly p5(double k) { return {MahlerFamily::p5, k, 1.0}; }

  void validate() const;
};

// Nodes where |P| falls under this floor abort the quadrature: the supported
// parameter ranges keep |P| bounded away from zero, so a hit signals a bug
// or an out-of-range parameter.
double mahler_zero_floor();

// m(P) = Int_{[0,1]^3} log|P(e^{2 pi i t1}, e^{2 pi i t2}, e^{2 pi i t3})|.
// Gauss-Legendre grids only; the error bound is a panel-doubling difference.
EvalResult mahler_measure(const LaurentPoly& poly, const CubatureGrid& grid);

// |m(P1) - 11 m(P2) + 7 m(P3) + 6 m(P4)| at the given alpha.
double mahler_identity_residual(double alpha, const CubatureGrid& grid);

// (m(P5(k)) by quadrature, log 2 + J(k/2) through the 5F4 route).
std::pair<double, double> mahler_to_j(double k, const CubatureGrid& grid,
                                      const PrecisionConfig& prec);

// Grid defaults per family: p4 oscillates near its minimum and gets a
// denser grid than the rest.
CubatureGrid default_mahler_grid(MahlerFamily family);

}  // namespace jpotts
