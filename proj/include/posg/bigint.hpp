#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace posg {

/// Exact arbitrary-precision integer. All element counts, factorials and
/// divisibility checks in this library go through this type; machine words
/// overflow at 21! already.
using BigInt = boost::multiprecision::cpp_int;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline BigInt factorial(std::uint64_t n) {
  BigInt acc = 1;
  for (std::uint64_t k = 2; k <= n; ++k) acc *= k;
  return acc;
}

/// Product lo * (lo+1) * ... * hi. Empty ranges (lo > hi) evaluate to 1,
/// matching the convention the counting formulas rely on at r = 0.
inline BigInt product_range(std::uint64_t lo, std::uint64_t hi) {
  BigInt acc = 1;
  for (std::uint64_t k = lo; k <= hi; ++k) acc *= k;
  return acc;
}

inline BigInt pow2(std::uint64_t k) {
  return BigInt(1) << k;
}

inline bool divides(const BigInt& a, const BigInt& b) {
  return a != 0 && b % a == 0;
}

inline std::string to_decimal(const BigInt& v) {
  return v.str();
}

}  // namespace posg
