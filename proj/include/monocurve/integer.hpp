#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "monocurve/error.hpp"

namespace monocurve {

/// Semigroup elements and generators. 64 bits with checked arithmetic: every
/// Apéry table is materialized, so any semigroup that fits in memory keeps its
/// elements far below the overflow boundary.
using Integer = std::int64_t;

inline Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(ErrorKind::Overflow, std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

}  // namespace monocurve
