#pragma once

#include <doctest.h>

#include <functional>

#include "zetasum/error.hpp"
#include "zetasum/real.hpp"

namespace testing {

using namespace zetasum;

inline Real tol(int exp10, Bits bits = 256) { return pow10(exp10, bits); }

// |a - b| <= 10^e
inline bool close(const Real& a, const Real& b, int e) { return abs(a - b) <= tol(e, a.bits()); }
inline bool close(const CValue& a, const CValue& b, int e) { return abs(a - b) <= tol(e, a.bits()); }

inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a zetasum::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace testing
