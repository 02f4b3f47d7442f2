#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <string_view>

#include "epure/error.hpp"

namespace epure {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar over arbitrary-precision integers.  Values are kept
// canonical at all times: reduced to lowest terms, denominator positive, zero
// stored as 0/1.  The canonical form makes operator== a plain field compare.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long long n) : v_(n) {}
  Rat(const BigInt& n) : v_(n) {}
  Rat(const BigInt& n, const BigInt& d) {
    if (d == 0) fail(errc::zero_denominator, "denominator is zero");
    // Division normalizes sign and reduces to lowest terms.
    v_ = boost::multiprecision::cpp_rational(n);
    v_ /= boost::multiprecision::cpp_rational(d);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  double to_double() const { return v_.convert_to<double>(); }

  // "p/q", or just "p" when the denominator is one.
  std::string str() const;

  // Accepts "p", "p/q", and decimal forms like "-12.75"; exact in all cases.
  static Rat parse(std::string_view text);

  Rat operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) fail(errc::zero_denominator, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
  boost::multiprecision::cpp_rational v_;
};

inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

inline std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

// Canonicalizing constructor exposed as a free function.
inline Rat normalize(const BigInt& num, const BigInt& den) { return Rat(num, den); }

// Floor of the exact quotient, correct for negative values.
BigInt floor_div(const BigInt& num, const BigInt& den);

// When x is the square of a rational, stores the nonnegative root and
// returns true.  Exact: uses integer square roots on both components.
bool rational_sqrt(const Rat& x, Rat& root);

}  // namespace epure
