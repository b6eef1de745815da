#pragma once

#include <functional>

#include "doctest.h"
#include "qpade/error.hpp"
#include "qpade/rational.hpp"

namespace qpade::test {

inline Rational R(long p, long q = 1) { return Rational(p, q); }

inline bool throws_kind(const std::function<void()>& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace qpade::test
