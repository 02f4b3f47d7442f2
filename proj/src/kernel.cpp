#include "epure/kernel.hpp"

namespace epure {

Scalar Scalar::combine(const Scalar& a, const Scalar& b, char op) {
  if (a.exact() != b.exact())
    fail(errc::mixed_backend, "arithmetic between exact and approx values");
  if (a.exact()) {
    const Rat& x = a.rat();
    const Rat& y = b.rat();
    switch (op) {
      case '+': return Scalar(x + y);
      case '-': return Scalar(x - y);
      case '*': return Scalar(x * y);
      default: return Scalar(x / y);
    }
  }
  double x = a.dbl();
  double y = b.dbl();
  switch (op) {
    case '+': return Scalar(x + y);
    case '-': return Scalar(x - y);
    case '*': return Scalar(x * y);
    default: return Scalar(x / y);
  }
}

bool scalar_is_zero(const Scalar& s, const Tol& t, double scale_hint) {
  return s.exact() ? s.rat().is_zero() : is_zero(s.dbl(), t, scale_hint);
}

}  // namespace epure
