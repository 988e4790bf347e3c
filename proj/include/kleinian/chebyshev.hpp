#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kleinian/core.hpp"

namespace kleinian {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint32_t kChebDegreeCap = 64;

// T_n(z) by the three-term recursion T_{n+1} = 2 z T_n - T_{n-1}, T_0 = 1, T_1 = z.
// This is the default evaluation path; the closed form below is a cross-check only.
inline Cplx cheb_recursive(std::uint32_t n, Cplx z) {
  if (n == 0) return 1.0;
  Cplx prev = 1.0, cur = z;
  for (std::uint32_t k = 1; k < n; ++k) {
    Cplx next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// T_n(z) = ((z - sqrt(z^2-1))^n + (z + sqrt(z^2-1))^n) / 2.
// Branch-independent: flipping the square root swaps the two summands.
inline Cplx cheb_closed(std::uint32_t n, Cplx z) {
  Cplx w = std::sqrt(z * z - 1.0);
  return (std::pow(z - w, n) + std::pow(z + w, n)) / 2.0;
}

// Exact integer coefficients of T_n, index = power of z.
struct ChebCoeffs {
  std::uint32_t n = 0;
  std::vector<BigInt> coeffs; // size n+1, coeffs[k] multiplies z^k

  Cplx eval(Cplx z) const { // Horner
    Cplx acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
      acc = acc * z + static_cast<double>(coeffs[k]);
    return acc;
  }

  BigInt eval_int(const BigInt& z) const {
    BigInt acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
  }
};

inline ChebCoeffs cheb_coeffs(std::uint32_t n) {
  if (n > kChebDegreeCap) throw DegreeCap("cheb_coeffs: degree cap is 64");
  std::vector<BigInt> prev{1}, cur{0, 1};
  if (n == 0) return {0, prev};
  for (std::uint32_t k = 1; k < n; ++k) {
    std::vector<BigInt> next(k + 2, BigInt(0));
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

} // namespace kleinian
