#pragma once

#include <string>

#include "jpotts/complex.hpp"

namespace jpotts {

// How a value was produced.
enum class Method {
  series,
  series_endpoint,   // |z| = 1 with positive parameter excess
  closed_form,
  gauss_legendre,
  tanh_sinh,
  lattice_sum,
  euler_maclaurin,
  mellin,
  special_value,
};

const char* method_name(Method m);

// Series terms and quadrature/lattice nodes actually consumed.
struct Work {
  long terms = 0;
  long nodes = 0;
};

// Numerical value with a claimed absolute error bound.
struct EvalResult {
  Cplx value;
  Real err_bound;
  Method method = Method::series;
  Work work;
  bool singular_endpoint = false;

  const Real& real() const { return value.re; }
};

// Target precision and effort caps shared across the library.
struct PrecisionConfig {
  int digits = 30;           // requested significant digits
  int guard_digits = 10;     // extra working digits
  long max_terms = 50'000'000;  // series term cap

  int working() const { return digits + guard_digits; }
  Real target_tol() const { return pow10(-digits); }
  // Absolute tail target used by series engines: a few digits beyond request.
  Real tail_tol() const { return pow10(-(digits + 3)); }
};

}  // namespace jpotts
