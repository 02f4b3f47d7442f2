#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include "epure/rational.hpp"

namespace epure {

// Comparison policy for the floating backend.  Exact values never consult it.
// A magnitude is treated as zero when it is at most
// max(eps_abs, eps_rel * |scale_hint|).
struct Tol {
  double eps_abs = 1e-12;
  double eps_rel = 1e-12;

  Tol() = default;
  Tol(double a, double r) : eps_abs(a), eps_rel(r) {
    if (!std::isfinite(a) || !std::isfinite(r) || a < 0 || r < 0 || (a == 0 && r == 0))
      fail(errc::invalid_tolerance,
           "eps_abs and eps_rel must be finite, nonnegative, and not both zero");
  }
};

inline bool is_zero(const Rat& x, const Tol& = Tol(), double = 1.0) { return x.is_zero(); }

inline bool is_zero(double x, const Tol& t, double scale_hint = 1.0) {
  return std::abs(x) <= std::max(t.eps_abs, t.eps_rel * std::abs(scale_hint));
}

// Backend traits for code templated on the scalar ring R (Rat or double).
template <class R>
struct ring;

template <>
struct ring<Rat> {
  static constexpr bool exact = true;
  static Rat from(const Rat& q) { return q; }
  static Rat from_int(long long n) { return Rat(n); }
  static double dbl(const Rat& q) { return q.to_double(); }
  static const char* name() { return "exact"; }
};

template <>
struct ring<double> {
  static constexpr bool exact = false;
  static double from(const Rat& q) { return q.to_double(); }
  static double from_int(long long n) { return static_cast<double>(n); }
  static double dbl(double x) { return x; }
  static const char* name() { return "approx"; }
};

// Tagged scalar for values that cross a backend boundary (reports, CLI
// output).  Arithmetic refuses to mix the two tags: geometry is computed
// entirely on one backend or the other, never on a blend.
class Scalar {
public:
  Scalar() : v_(Rat(0)) {}
  Scalar(Rat q) : v_(std::move(q)) {}
  Scalar(double x) : v_(x) {}

  bool exact() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const { return std::get<Rat>(v_); }
  double dbl() const { return std::get<double>(v_); }

  double value_as_double() const { return exact() ? rat().to_double() : dbl(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return combine(a, b, '+'); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return combine(a, b, '-'); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return combine(a, b, '*'); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return combine(a, b, '/'); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact() != b.exact()) fail(errc::mixed_backend, "comparing exact with approx");
    return a.exact() ? a.rat() == b.rat() : a.dbl() == b.dbl();
  }

private:
  static Scalar combine(const Scalar& a, const Scalar& b, char op);

  std::variant<Rat, double> v_;
};

bool scalar_is_zero(const Scalar& s, const Tol& t, double scale_hint = 1.0);

// Canonical representative of a homogeneous tuple.  Exact: integer entries,
// coprime, first nonzero entry positive.  Floating: scaled so the largest
// magnitude is one, first nonzero entry positive.  The zero tuple is left
// untouched; callers reject it where it is illegal.
template <std::size_t N>
void canon_tuple(std::array<Rat, N>& a) {
  BigInt l = 1;
  for (const Rat& x : a) l = boost::multiprecision::lcm(l, x.denominator());
  std::array<BigInt, N> n;
  BigInt g = 0;
  for (std::size_t i = 0; i < N; ++i) {
    n[i] = a[i].numerator() * (l / a[i].denominator());
    g = boost::multiprecision::gcd(g, n[i]);
  }
  if (g == 0) return;
  for (std::size_t i = 0; i < N; ++i) {
    if (n[i] != 0) {
      if (n[i] < 0) g = -g;
      break;
    }
  }
  for (std::size_t i = 0; i < N; ++i) a[i] = Rat(n[i] / g);
}

template <std::size_t N>
void canon_tuple(std::array<double, N>& a) {
  double m = 0;
  for (double x : a) m = std::max(m, std::abs(x));
  if (m == 0) return;
  double s = 1.0 / m;
  for (double x : a) {
    if (x != 0) {
      if (x < 0) s = -s;
      break;
    }
  }
  for (double& x : a) x *= s;
}

}  // namespace epure
