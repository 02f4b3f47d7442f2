#include "epure/rational.hpp"

#include <cctype>

namespace epure {

std::string Rat::str() const {
  std::string s = numerator().str();
  if (!is_integer()) {
    s += '/';
    s += denominator().str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(errc::parse_error, "malformed rational literal '" + std::string(text) + "'");
    BigInt d = BigInt(std::string(den));
    if (d == 0) fail(errc::parse_error, "zero denominator in literal '" + std::string(text) + "'");
    value = Rat(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view intpart = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!intpart.empty() && !all_digits(intpart)) || !all_digits(frac))
      fail(errc::parse_error, "malformed decimal literal '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt whole = intpart.empty() ? BigInt(0) : BigInt(std::string(intpart));
    value = Rat(whole * scale + BigInt(std::string(frac)), scale);
  } else {
    if (!all_digits(s))
      fail(errc::parse_error, "malformed integer literal '" + std::string(text) + "'");
    value = Rat(BigInt(std::string(s)));
  }
  return neg ? -value : value;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den) != 0 && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

bool rational_sqrt(const Rat& x, Rat& root) {
  if (x.sign() < 0) return false;
  BigInt n = x.numerator();
  BigInt d = x.denominator();
  BigInt rn = boost::multiprecision::sqrt(n);
  BigInt rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rat(rn, rd);
  return true;
}

}  // namespace epure
