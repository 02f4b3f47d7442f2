#pragma once

#include <doctest.h>

#include "epure/error.hpp"
#include "epure/p2.hpp"
#include "epure/rational.hpp"

// Assert that the lambda fails with the given error code.
#define CHECK_FAILS(code_, ...)                                   \
  do {                                                            \
    bool threw_ = false;                                          \
    try {                                                         \
      __VA_ARGS__();                                              \
    } catch (const epure::Error& e_) {                            \
      threw_ = true;                                              \
      CHECK_MESSAGE(e_.code() == epure::errc::code_, e_.what()); \
    }                                                             \
    CHECK_MESSAGE(threw_, "expected a failure, none thrown");     \
  } while (0)

namespace tutil {

inline epure::Rat Q(long long n, long long d = 1) {
  return epure::Rat(epure::BigInt(n), epure::BigInt(d));
}

inline epure::Pt2<epure::Rat> pt(long long x, long long y) {
  return epure::Pt2<epure::Rat>::affine(Q(x), Q(y));
}

inline epure::Pt2<epure::Rat> ptq(const epure::Rat& x, const epure::Rat& y) {
  return epure::Pt2<epure::Rat>::affine(x, y);
}

}  // namespace tutil
