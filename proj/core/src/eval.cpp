#include "jpotts/eval.hpp"

namespace jpotts {

const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::series_endpoint: return "series-endpoint";
    case Method::closed_form: return "closed-form";
    case Method::gauss_legendre: return "gauss-legendre";
    case Method::tanh_sinh: return "tanh-sinh";
    case Method::lattice_sum: return "lattice-sum";
    case Method::euler_maclaurin: return "euler-maclaurin";
    case Method::mellin: return "mellin";
    case Method::special_value: return "special-value";
  }
  return "unknown";
}

}  // namespace jpotts
